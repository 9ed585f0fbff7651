//! The on-disk map format: strict JSON with rationals as strings.
//!
//! Unknown fields are rejected so coefficient-name typos fail loudly.
//! Canonical documents (all blocks present, rationals in lowest terms,
//! two-space pretty printing) round-trip byte for byte.

use serde::{Deserialize, Serialize};

use cubic_forms::map::CubicMap;
use cubic_forms::rational::{format_rat, parse_rat, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Rows hold symmetric-tensor components.
    Tensor,
    /// Rows hold raw polynomial coefficients; the mixed cubic entries are
    /// divided by 3 and the mixed quadratic entry by 2.
    Poly,
}

/// A cubic map as written by hand or by this tool.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDocument {
    pub version: u32,
    pub mode: Mode,
    /// Cubic rows, `[x1^3, x1^2 x2, x1 x2^2, x2^3]` per output.
    pub f: [[String; 4]; 2],
    /// Quadratic rows, `[x1^2, x1 x2, x2^2]`; defaults to zero.
    #[serde(default)]
    pub q: Option<[[String; 3]; 2]>,
    /// Linear rows; defaults to zero.
    #[serde(default)]
    pub l: Option<[[String; 2]; 2]>,
    /// Constant part; defaults to zero.
    #[serde(default)]
    pub c: Option<[String; 2]>,
}

/// A document-level validation failure, anchored to the offending field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DocumentError {
    pub field: String,
    pub message: String,
}

impl std::fmt::Display for DocumentError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "field {}: {}", self.field, self.message)
    }
}

impl std::error::Error for DocumentError {}

impl MapDocument {
    pub fn parse(text: &str) -> Result<Self, String> {
        let doc: MapDocument = serde_json::from_str(text).map_err(|e| e.to_string())?;
        if doc.version != 1 {
            return Err(format!("unsupported document version {}", doc.version));
        }
        Ok(doc)
    }

    /// Converts to an exact map, naming the first offending field on
    /// failure.
    pub fn to_map(&self) -> Result<CubicMap, DocumentError> {
        let parse = |field: String, text: &str| -> Result<Rat, DocumentError> {
            parse_rat(text).map_err(|_| DocumentError {
                field,
                message: format!("not a rational: {text:?}"),
            })
        };
        let mut f = [[(); 4]; 2].map(|row| row.map(|_| Rat::from_integer(0.into())));
        for (i, row) in self.f.iter().enumerate() {
            for (k, text) in row.iter().enumerate() {
                f[i][k] = parse(format!("f[{i}][{k}]"), text)?;
            }
        }
        let mut q = [[(); 3]; 2].map(|row| row.map(|_| Rat::from_integer(0.into())));
        if let Some(block) = &self.q {
            for (i, row) in block.iter().enumerate() {
                for (k, text) in row.iter().enumerate() {
                    q[i][k] = parse(format!("q[{i}][{k}]"), text)?;
                }
            }
        }
        let mut l = [[(); 2]; 2].map(|row| row.map(|_| Rat::from_integer(0.into())));
        if let Some(block) = &self.l {
            for (i, row) in block.iter().enumerate() {
                for (k, text) in row.iter().enumerate() {
                    l[i][k] = parse(format!("l[{i}][{k}]"), text)?;
                }
            }
        }
        let mut c = [Rat::from_integer(0.into()), Rat::from_integer(0.into())];
        if let Some(block) = &self.c {
            for (i, text) in block.iter().enumerate() {
                c[i] = parse(format!("c[{i}]"), text)?;
            }
        }
        Ok(match self.mode {
            Mode::Tensor => {
                let mut map = CubicMap::from_tensor(f);
                map.q = q;
                map.l = l;
                map.c = c;
                map
            }
            Mode::Poly => CubicMap::from_polynomial_coefficients(f, q, l, c),
        })
    }

    /// The canonical form: all blocks present, every rational reduced.
    pub fn canonicalize(&self) -> Result<MapDocument, DocumentError> {
        let map = self.to_map()?;
        Ok(MapDocument::from_map_with_mode(&map, self.mode))
    }

    /// Canonical document for a map, in the requested coefficient mode.
    pub fn from_map_with_mode(map: &CubicMap, mode: Mode) -> MapDocument {
        let three = Rat::from_integer(3.into());
        let two = Rat::from_integer(2.into());
        let f = [0, 1].map(|i| {
            [0, 1, 2, 3].map(|k| {
                let tensor = &map.f[i][k];
                let value = match (mode, k) {
                    (Mode::Poly, 1 | 2) => tensor * &three,
                    _ => tensor.clone(),
                };
                format_rat(&value)
            })
        });
        let q = [0, 1].map(|i| {
            [0, 1, 2].map(|k| {
                let tensor = &map.q[i][k];
                let value = match (mode, k) {
                    (Mode::Poly, 1) => tensor * &two,
                    _ => tensor.clone(),
                };
                format_rat(&value)
            })
        });
        let l = [0, 1].map(|i| [0, 1].map(|k| format_rat(&map.l[i][k])));
        let c = [0, 1].map(|i| format_rat(&map.c[i]));
        MapDocument {
            version: 1,
            mode,
            f,
            q: Some(q),
            l: Some(l),
            c: Some(c),
        }
    }

    /// Deterministic pretty JSON; parsing this text reproduces the
    /// document byte for byte.
    #[cfg(test)]
    pub fn to_canonical_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("document serialization");
        out.push('\n');
        out
    }
}
