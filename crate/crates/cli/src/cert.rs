//! Certificate files: a tree packing plus the hash of the graph it belongs to.

use kappa3::packing::{TreeCert, TreePacking};
use kappa3::{Graph, VertexId};
use serde::{Deserialize, Serialize};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateFile {
    pub v: u32,
    pub terminals: [VertexId; 3],
    pub trees: Vec<Vec<(VertexId, VertexId)>>,
    pub graph_hash: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<String>,
    pub tool_version: String,
}

impl CertificateFile {
    pub fn new(g: &Graph, packing: &TreePacking, generator: Option<String>) -> Self {
        CertificateFile {
            v: FORMAT_VERSION,
            terminals: packing.terminals,
            trees: packing.trees.iter().map(|t| t.edges().to_vec()).collect(),
            graph_hash: g.hash_hex(),
            generator,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn packing(&self) -> TreePacking {
        TreePacking {
            terminals: self.terminals,
            trees: self.trees.iter().map(|t| TreeCert::from_edges(t.iter().copied())).collect(),
        }
    }
}
