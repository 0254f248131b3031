//! JSON formats.
//!
//! - graph: `{"n": 4, "matrix": [[0, 1, 0, 1], ...]}`
//! - labeled graph: `{"n": 4, "d": 3, "rot": [[v, h, w, k], ...]}` with one
//!   entry per pair `(v, h)`, meaning `Rot(v, h) = (w, k)`
//! - partition: `{"blocks": [[0, 1], [2], ...]}`

use std::fs;
use std::path::Path;

use num_bigint::BigInt;
use permpow_core::{Graph, IntegerMatrix, LabeledGraph, Partition};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Core(#[from] permpow_core::Error),
    #[error("declared n = {declared} but the data has {found} rows")]
    SizeMismatch { declared: usize, found: usize },
    #[error("entry ({row}, {col}) does not fit in a u64")]
    Overflow { row: usize, col: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    pub matrix: Vec<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledGraphFile {
    pub n: usize,
    pub d: usize,
    pub rot: Vec<[usize; 4]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionFile {
    pub blocks: Vec<Vec<usize>>,
}

impl GraphFile {
    pub fn from_matrix(m: &IntegerMatrix) -> Result<Self, FormatError> {
        let matrix = (0..m.rows())
            .map(|i| {
                m.row(i)
                    .iter()
                    .enumerate()
                    .map(|(j, x)| u64::try_from(x).map_err(|_| FormatError::Overflow { row: i, col: j }))
                    .collect()
            })
            .collect::<Result<_, _>>()?;
        Ok(GraphFile { n: m.rows(), matrix })
    }

    pub fn from_graph(g: &Graph) -> Result<Self, FormatError> {
        Self::from_matrix(g.adjacency())
    }

    pub fn to_graph(&self) -> Result<Graph, FormatError> {
        if self.matrix.len() != self.n {
            return Err(FormatError::SizeMismatch {
                declared: self.n,
                found: self.matrix.len(),
            });
        }
        let rows = self
            .matrix
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Ok(Graph::from_adjacency(IntegerMatrix::from_rows(rows)?)?)
    }
}

impl LabeledGraphFile {
    pub fn from_labeled(g: &LabeledGraph) -> Self {
        LabeledGraphFile {
            n: g.vertex_count(),
            d: g.degree(),
            rot: g.quadruples().into_iter().map(|(v, h, w, k)| [v, h, w, k]).collect(),
        }
    }

    pub fn to_labeled(&self) -> Result<LabeledGraph, FormatError> {
        let quads: Vec<_> = self.rot.iter().map(|&[v, h, w, k]| (v, h, w, k)).collect();
        Ok(LabeledGraph::new(self.n, self.d, &quads)?)
    }
}

impl PartitionFile {
    pub fn from_partition(p: &Partition) -> Self {
        PartitionFile {
            blocks: p.blocks().to_vec(),
        }
    }

    pub fn to_partition(&self) -> Result<Partition, FormatError> {
        let n = self.blocks.iter().map(Vec::len).sum();
        Ok(Partition::new(n, self.blocks.clone())?)
    }
}

fn read(path: &Path) -> Result<String, FormatError> {
    fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), FormatError> {
    fs::write(path, text).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn graph_from_json(text: &str) -> Result<Graph, FormatError> {
    serde_json::from_str::<GraphFile>(text)?.to_graph()
}

pub fn graph_to_json(g: &Graph) -> Result<String, FormatError> {
    Ok(serde_json::to_string_pretty(&GraphFile::from_graph(g)?)?)
}

pub fn labeled_from_json(text: &str) -> Result<LabeledGraph, FormatError> {
    serde_json::from_str::<LabeledGraphFile>(text)?.to_labeled()
}

pub fn labeled_to_json(g: &LabeledGraph) -> Result<String, FormatError> {
    Ok(serde_json::to_string_pretty(&LabeledGraphFile::from_labeled(g))?)
}

pub fn partition_from_json(text: &str) -> Result<Partition, FormatError> {
    serde_json::from_str::<PartitionFile>(text)?.to_partition()
}

pub fn partition_to_json(p: &Partition) -> Result<String, FormatError> {
    Ok(serde_json::to_string_pretty(&PartitionFile::from_partition(p))?)
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<Graph, FormatError> {
    graph_from_json(&read(path.as_ref())?)
}

pub fn write_graph(path: impl AsRef<Path>, g: &Graph) -> Result<(), FormatError> {
    write(path.as_ref(), &graph_to_json(g)?)
}

pub fn read_labeled(path: impl AsRef<Path>) -> Result<LabeledGraph, FormatError> {
    labeled_from_json(&read(path.as_ref())?)
}

pub fn write_labeled(path: impl AsRef<Path>, g: &LabeledGraph) -> Result<(), FormatError> {
    write(path.as_ref(), &labeled_to_json(g)?)
}

pub fn read_partition(path: impl AsRef<Path>) -> Result<Partition, FormatError> {
    partition_from_json(&read(path.as_ref())?)
}

pub fn write_text(path: impl AsRef<Path>, text: &str) -> Result<(), FormatError> {
    write(path.as_ref(), text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 2)]).unwrap();
        assert_eq!(graph_from_json(&graph_to_json(&g).unwrap()).unwrap(), g);
    }

    #[test]
    fn rejects_bad_graphs() {
        assert!(matches!(graph_from_json("{\"n\": 2"), Err(FormatError::Json(_))));
        assert!(matches!(
            graph_from_json(r#"{"n": 3, "matrix": [[0, 1], [1, 0]]}"#),
            Err(FormatError::SizeMismatch { declared: 3, found: 2 })
        ));
        assert!(matches!(
            graph_from_json(r#"{"n": 2, "matrix": [[0, 1], [0, 0]]}"#),
            Err(FormatError::Core(permpow_core::Error::NotSymmetric { .. }))
        ));
    }

    #[test]
    fn labeled_round_trip() {
        let text = r#"{"n": 2, "d": 1, "rot": [[0, 0, 1, 0], [1, 0, 0, 0]]}"#;
        let g = labeled_from_json(text).unwrap();
        assert_eq!(labeled_from_json(&labeled_to_json(&g).unwrap()).unwrap(), g);
    }

    #[test]
    fn partition_round_trip() {
        let p = partition_from_json(r#"{"blocks": [[3, 0], [1], [2]]}"#).unwrap();
        assert_eq!(p.blocks(), &[vec![0, 3], vec![1], vec![2]]);
        assert_eq!(partition_from_json(&partition_to_json(&p).unwrap()).unwrap(), p);
    }
}
