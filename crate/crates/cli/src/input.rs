//! Reading posets, partitions and element specs from the command line.

use std::fs;
use std::path::Path;

use posetprob::tableaux::{cell_poset, Cell, Partition};
use posetprob::{Limits, Poset};
use serde::Deserialize;

use crate::CliError;

pub const MAX_IDEALS_VAR: &str = "POSETPROB_MAX_IDEALS";

/// Either an explicit poset or the cell poset of a partition.
pub enum Input {
    Poset(Poset),
    Partition(Partition),
}

/// An element resolved against an [`Input`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Element {
    Index(usize),
    Cell(Cell),
}

impl Input {
    pub fn load(partition: Option<&str>, poset: Option<&Path>) -> Result<Self, CliError> {
        match (partition, poset) {
            (Some(p), None) => Ok(Input::Partition(
                p.parse().map_err(|e| CliError::Usage(format!("--partition: {e}")))?,
            )),
            (None, Some(path)) => Ok(Input::Poset(read_poset(path)?)),
            _ => Err(CliError::Usage("give exactly one of --partition or --poset".into())),
        }
    }

    /// The poset itself, building the cell poset for partitions.
    pub fn poset(&self) -> Poset {
        match self {
            Input::Poset(p) => p.clone(),
            Input::Partition(lambda) => cell_poset(lambda).poset().clone(),
        }
    }

    pub fn element(&self, spec: &str, zero_indexed: bool) -> Result<Element, CliError> {
        match self {
            Input::Poset(p) => p
                .index_of(spec.trim())
                .map(Element::Index)
                .ok_or_else(|| CliError::Usage(format!("no element labelled {spec:?}"))),
            Input::Partition(_) => {
                let c: Cell = spec.parse().map_err(|e| CliError::Usage(format!("{e}")))?;
                if zero_indexed {
                    Ok(Element::Cell(Cell::new(c.row + 1, c.col + 1)))
                } else if c.row == 0 || c.col == 0 {
                    Err(CliError::Usage(format!(
                        "cell {c} is not one-indexed (pass --zero-indexed for 0-based cells)"
                    )))
                } else {
                    Ok(Element::Cell(c))
                }
            }
        }
    }

    /// Index of an element inside [`Input::poset`].
    pub fn index(&self, e: Element) -> Result<usize, CliError> {
        match (self, e) {
            (_, Element::Index(i)) => Ok(i),
            (Input::Partition(lambda), Element::Cell(c)) => Ok(cell_poset(lambda).index_of(c)?),
            (Input::Poset(_), Element::Cell(_)) => unreachable!("cells only come from partitions"),
        }
    }
}

#[derive(Deserialize)]
struct PosetJson {
    n: usize,
    #[serde(default)]
    covers: Vec<(usize, usize)>,
    labels: Option<Vec<String>>,
}

/// Text (`n` then `u v` lines, `#` comments) or JSON
/// (`{"n": .., "covers": [[u, v], ..], "labels": [..]}`).
pub fn parse_poset(text: &str) -> Result<Poset, CliError> {
    let bad = |msg: String| CliError::PosetFile(msg);
    if text.trim_start().starts_with('{') {
        let raw: PosetJson = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
        let labels = raw.labels.unwrap_or_else(|| (0..raw.n).map(|i| i.to_string()).collect());
        if labels.len() != raw.n {
            return Err(bad(format!("{} labels for {} elements", labels.len(), raw.n)));
        }
        return Ok(Poset::with_labels(labels, &raw.covers)?);
    }
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .enumerate()
        .filter(|(_, l)| !l.is_empty());
    let (_, first) = lines.next().ok_or_else(|| bad("empty poset file".into()))?;
    let n: usize = first.parse().map_err(|_| bad(format!("expected element count, got {first:?}")))?;
    let mut edges = Vec::new();
    for (no, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let pair = match fields[..] {
            [u, v] => u.parse().ok().zip(v.parse().ok()),
            _ => None,
        };
        edges.push(pair.ok_or_else(|| bad(format!("line {}: expected `u v`, got {line:?}", no + 1)))?);
    }
    Ok(Poset::from_covers(n, &edges)?)
}

pub fn read_poset(path: &Path) -> Result<Poset, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_poset(&text)
}

/// Default limits, with the ideal cap overridable from the environment.
pub fn limits() -> Result<Limits, CliError> {
    let mut limits = Limits::default();
    if let Ok(v) = std::env::var(MAX_IDEALS_VAR) {
        limits.max_ideals = v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{MAX_IDEALS_VAR} must be a positive integer, got {v:?}")))?;
    }
    Ok(limits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_and_json_agree() {
        let text = "# five elements\n5\n0 1\n0 2\n2 3\n3 4\n1 4\n";
        let json = r#"{"n": 5, "covers": [[0,1],[0,2],[2,3],[3,4],[1,4]]}"#;
        let a = parse_poset(text).unwrap();
        let b = parse_poset(json).unwrap();
        assert_eq!(a.covers(), b.covers());
        assert_eq!(a.label(3), "3");
    }

    #[test]
    fn json_labels() {
        let p = parse_poset(r#"{"n": 2, "covers": [[0,1]], "labels": ["x", "y"]}"#).unwrap();
        assert_eq!(p.index_of("y"), Some(1));
        assert!(matches!(
            parse_poset(r#"{"n": 2, "labels": ["x"]}"#),
            Err(CliError::PosetFile(_))
        ));
    }

    #[test]
    fn malformed_text() {
        assert!(matches!(parse_poset(""), Err(CliError::PosetFile(_))));
        assert!(matches!(parse_poset("3\n0 1 2\n"), Err(CliError::PosetFile(_))));
        assert!(matches!(parse_poset("2\n0 1\n1 0\n"), Err(CliError::Domain(_))));
    }

    #[test]
    fn zero_indexed_cells() {
        let input = Input::Partition("4,3,3".parse().unwrap());
        assert_eq!(input.element("1,2", true).unwrap(), Element::Cell(Cell::new(2, 3)));
        assert_eq!(input.element("(1,2)", false).unwrap(), Element::Cell(Cell::new(1, 2)));
        assert!(matches!(input.element("0,2", false), Err(CliError::Usage(_))));
    }
}
