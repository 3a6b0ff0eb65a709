//! The JSON instance and decomposition file format.
//!
//! ```json
//! {
//!   "p": 2,
//!   "dim": 3,
//!   "generators": [
//!     [[0, 1, 0], [0, 0, 0], [0, 0, 0]]
//!   ],
//!   "N": [[0, 0, 1]],
//!   "label": "D",
//!   "parts": [
//!     [[1, 0, 0], [0, 1, 0]]
//!   ]
//! }
//! ```
//!
//! Generators are row-major and act on column vectors. `N` and each part
//! are spanning lists of vectors. A decomposition file is an instance file
//! with `parts`.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modcore::{ModulePresentation, Submodule, Subspace};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub p: u32,
    pub dim: usize,
    pub generators: Vec<Vec<Vec<i64>>>,
    #[serde(rename = "N", default, skip_serializing_if = "Option::is_none")]
    pub n: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parts: Option<Vec<Vec<Vec<i64>>>>,
}

/// A validated instance file.
#[derive(Clone, Debug)]
pub struct LoadedInstance {
    pub module: ModulePresentation,
    pub base: Submodule,
    pub parts: Option<Vec<Submodule>>,
    /// Problems that were repaired on load (a spanning set that was not
    /// generator-invariant and had to be closed).
    pub warnings: Vec<String>,
}

fn vectors(p: u32, dim: usize, rows: &[Vec<i64>], what: &str) -> Result<Vec<Vec<u8>>> {
    rows.iter()
        .map(|v| {
            if v.len() != dim {
                return Err(Error::Input(format!(
                    "{what}: vector of length {} in a module of dimension {dim}",
                    v.len()
                )));
            }
            v.iter()
                .map(|&x| {
                    if x < 0 || x >= p as i64 {
                        Err(Error::Input(format!("{what}: entry {x} out of range for p = {p}")))
                    } else {
                        Ok(x as u8)
                    }
                })
                .collect()
        })
        .collect()
}

fn span_closed(
    m: &ModulePresentation,
    rows: &[Vec<i64>],
    what: &str,
    warnings: &mut Vec<String>,
) -> Result<Submodule> {
    let vs = vectors(m.p(), m.dim(), rows, what)?;
    let span = Subspace::span(m.p(), m.dim(), &vs)?;
    let closed = m.closure(&vs)?;
    if closed.dim() != span.dim() {
        warnings.push(format!(
            "{what} is not a submodule; replaced by its closure {closed}"
        ));
    }
    Ok(closed)
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Input(format!("malformed instance file: {e}")))
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Validates the document. `N` defaults to zero and must be proper.
    pub fn load(&self) -> Result<LoadedInstance> {
        let label = self.label.clone().unwrap_or_else(|| "M".to_string());
        for (i, g) in self.generators.iter().enumerate() {
            if g.len() != self.dim || g.iter().any(|r| r.len() != self.dim) {
                return Err(Error::Input(format!(
                    "generator {i} is not a {d}x{d} matrix",
                    d = self.dim
                )));
            }
        }
        let module = ModulePresentation::from_int_rows(self.p, self.dim, &self.generators, &label)?;
        let mut warnings = Vec::new();
        let base = match &self.n {
            Some(rows) => span_closed(&module, rows, "N", &mut warnings)?,
            None => module.zero_submodule(),
        };
        if base.dim() == module.dim() {
            return Err(Error::NotProper);
        }
        let parts = match &self.parts {
            Some(ps) => Some(
                ps.iter()
                    .enumerate()
                    .map(|(i, rows)| span_closed(&module, rows, &format!("part {}", i + 1), &mut warnings))
                    .collect::<Result<Vec<_>>>()?,
            ),
            None => None,
        };
        Ok(LoadedInstance {
            module,
            base,
            parts,
            warnings,
        })
    }

    /// The canonical document for a module, base and optional parts. A zero
    /// base is omitted.
    pub fn from_parts(m: &ModulePresentation, base: &Submodule, parts: Option<&[Submodule]>) -> Self {
        let rows = |s: &Submodule| -> Vec<Vec<i64>> {
            s.basis()
                .iter()
                .map(|v| v.iter().map(|&x| x as i64).collect())
                .collect()
        };
        InstanceFile {
            p: m.p(),
            dim: m.dim(),
            generators: m
                .generators()
                .iter()
                .map(|g| {
                    g.to_rows()
                        .into_iter()
                        .map(|r| r.into_iter().map(i64::from).collect())
                        .collect()
                })
                .collect(),
            n: (!base.is_zero()).then(|| rows(base)),
            label: Some(m.label().to_string()),
            parts: parts.map(|ps| ps.iter().map(rows).collect()),
        }
    }

    /// Deterministic rendering with one matrix row or vector list per line.
    pub fn to_json(&self) -> String {
        let mut s = String::from("{\n");
        let _ = writeln!(s, "  \"p\": {},", self.p);
        let _ = writeln!(s, "  \"dim\": {},", self.dim);
        s.push_str("  \"generators\": [");
        if self.generators.is_empty() {
            s.push(']');
        } else {
            s.push('\n');
            for (i, g) in self.generators.iter().enumerate() {
                let sep = if i + 1 < self.generators.len() { "," } else { "" };
                let _ = writeln!(s, "    {}{sep}", compact(g));
            }
            s.push_str("  ]");
        }
        if let Some(n) = &self.n {
            let _ = write!(s, ",\n  \"N\": {}", compact(n));
        }
        if let Some(l) = &self.label {
            let _ = write!(s, ",\n  \"label\": {}", serde_json::to_string(l).expect("string"));
        }
        if let Some(parts) = &self.parts {
            s.push_str(",\n  \"parts\": [");
            if parts.is_empty() {
                s.push(']');
            } else {
                s.push('\n');
                for (i, part) in parts.iter().enumerate() {
                    let sep = if i + 1 < parts.len() { "," } else { "" };
                    let _ = writeln!(s, "    {}{sep}", compact(part));
                }
                s.push_str("  ]");
            }
        }
        s.push_str("\n}\n");
        s
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json())
            .map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display())))
    }
}

fn compact(rows: &[Vec<i64>]) -> String {
    let rows: Vec<String> = rows
        .iter()
        .map(|r| {
            let xs: Vec<String> = r.iter().map(i64::to_string).collect();
            format!("[{}]", xs.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modcore::fixtures;

    #[test]
    fn round_trip() {
        let d = fixtures::mixed();
        let n = d.closure(&[vec![0, 0, 1]]).unwrap();
        let parts = [d.full_submodule().clone(), n.clone()];
        let doc = InstanceFile::from_parts(&d, &n, Some(&parts[1..]));
        let text = doc.to_json();
        let back = InstanceFile::parse(&text).unwrap();
        assert_eq!(back, doc);
        let loaded = back.load().unwrap();
        assert_eq!(loaded.module, d);
        assert_eq!(loaded.base, n);
        assert_eq!(loaded.parts.unwrap(), vec![n.clone()]);
        assert_eq!(InstanceFile::from_parts(&loaded.module, &loaded.base, Some(&[n])), doc);
    }

    #[test]
    fn rejects_non_prime_and_unknown_fields() {
        let bad = InstanceFile::parse(r#"{"p": 4, "dim": 1, "generators": []}"#).unwrap();
        let err = bad.load().unwrap_err();
        assert!(err.to_string().contains("p must be prime"), "{err}");
        assert!(InstanceFile::parse(r#"{"p": 2, "dim": 1, "generators": [], "extra": 1}"#).is_err());
    }

    #[test]
    fn rejects_full_base_and_bad_entries() {
        let full = InstanceFile::parse(r#"{"p": 2, "dim": 1, "generators": [], "N": [[1]]}"#).unwrap();
        assert_eq!(full.load().unwrap_err().to_string(), "N must be proper");
        let range = InstanceFile::parse(r#"{"p": 2, "dim": 1, "generators": [[[2]]]}"#).unwrap();
        assert!(matches!(range.load(), Err(Error::Input(_))));
        let ragged = InstanceFile::parse(r#"{"p": 2, "dim": 2, "generators": [[[1, 0]]]}"#).unwrap();
        assert!(matches!(ragged.load(), Err(Error::Input(_))));
    }

    #[test]
    fn non_invariant_base_is_closed_with_warning() {
        let doc = InstanceFile::from_parts(&fixtures::mixed(), &fixtures::mixed().zero_submodule(), None);
        let doc = InstanceFile {
            n: Some(vec![vec![0, 1, 0]]),
            ..doc
        };
        let loaded = doc.load().unwrap();
        assert_eq!(loaded.base.dim(), 2);
        assert_eq!(loaded.warnings.len(), 1);
    }
}
