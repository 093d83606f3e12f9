//! JSON views of the core types.  Field layouts are stable: polynomials list
//! terms in canonical order, tableaux list rows bottom up, factorizations
//! list blocks left to right.

use demazure_core::crystal::{CrystalElement, CrystalGraph, RfElement, RfcElement};
use demazure_core::eg::{IncTableau, InsertionPair, LiftedTableau, WeakInsertionPair};
use demazure_core::factorization::ReducedFactorization;
use demazure_core::key::KeyTableau;
use demazure_core::poly::SparsePolynomial;
use demazure_core::ssyt::Ssyt;
use serde::Serialize;

#[derive(Serialize)]
pub struct TermJson {
    pub exponents: Vec<usize>,
    pub coeff: i64,
}

pub fn polynomial_json(p: &SparsePolynomial) -> Vec<TermJson> {
    p.terms()
        .map(|(exponents, coeff)| TermJson {
            exponents: exponents.to_vec(),
            coeff,
        })
        .collect()
}

#[derive(Serialize)]
pub struct TableauJson {
    pub shape: Vec<usize>,
    pub rows: Vec<Vec<usize>>,
}

pub fn ssyt_json(t: &Ssyt) -> TableauJson {
    TableauJson {
        shape: t.shape().parts().to_vec(),
        rows: t.rows().to_vec(),
    }
}

pub fn key_json(t: &KeyTableau) -> TableauJson {
    TableauJson {
        shape: t.shape().parts().to_vec(),
        rows: t.rows().to_vec(),
    }
}

pub fn inc_json(t: &IncTableau) -> TableauJson {
    TableauJson {
        shape: t.shape().parts().to_vec(),
        rows: t.rows().to_vec(),
    }
}

pub fn lifted_json(t: &LiftedTableau) -> TableauJson {
    TableauJson {
        shape: t.shape().parts().to_vec(),
        rows: t.rows().to_vec(),
    }
}

#[derive(Serialize)]
pub struct FactorizationJson {
    pub blocks: Vec<Vec<usize>>,
    pub permutation: String,
}

pub fn factorization_json(r: &ReducedFactorization) -> FactorizationJson {
    let n = r.word().iter().copied().max().unwrap_or(0) + 1;
    let permutation = r
        .underlying_permutation(n)
        .map(|w| w.to_string())
        .unwrap_or_default();
    FactorizationJson {
        blocks: r.blocks().to_vec(),
        permutation,
    }
}

#[derive(Serialize)]
pub struct InsertionPairJson {
    #[serde(rename = "P")]
    pub p: TableauJson,
    #[serde(rename = "Q")]
    pub q: TableauJson,
    pub kind: &'static str,
}

pub fn insertion_pair_json(pair: &InsertionPair) -> InsertionPairJson {
    InsertionPairJson {
        p: inc_json(&pair.p),
        q: ssyt_json(&pair.q),
        kind: "young",
    }
}

pub fn weak_insertion_pair_json(pair: &WeakInsertionPair) -> InsertionPairJson {
    InsertionPairJson {
        p: lifted_json(&pair.p_hat),
        q: key_json(&pair.q_hat),
        kind: "key",
    }
}

#[derive(Serialize)]
pub struct CrystalNodeJson {
    pub id: usize,
    pub weight: Vec<usize>,
    pub payload: serde_json::Value,
}

#[derive(Serialize)]
pub struct CrystalEdgeJson {
    pub src: usize,
    pub color: usize,
    pub dst: usize,
}

#[derive(Serialize)]
pub struct CrystalJson {
    pub nodes: Vec<CrystalNodeJson>,
    pub edges: Vec<CrystalEdgeJson>,
}

/// A crystal node payload rendered as JSON, plus a short text label.
pub trait CrystalPayload: CrystalElement {
    fn payload_json(&self) -> serde_json::Value;
    fn label(&self) -> String;
}

impl CrystalPayload for Ssyt {
    fn payload_json(&self) -> serde_json::Value {
        serde_json::to_value(ssyt_json(self)).expect("serializable")
    }

    fn label(&self) -> String {
        self.to_string()
    }
}

impl CrystalPayload for KeyTableau {
    fn payload_json(&self) -> serde_json::Value {
        serde_json::to_value(key_json(self)).expect("serializable")
    }

    fn label(&self) -> String {
        self.to_string()
    }
}

impl CrystalPayload for RfElement {
    fn payload_json(&self) -> serde_json::Value {
        serde_json::to_value(factorization_json(&self.0)).expect("serializable")
    }

    fn label(&self) -> String {
        self.0.to_string()
    }
}

impl CrystalPayload for RfcElement {
    fn payload_json(&self) -> serde_json::Value {
        serde_json::to_value(factorization_json(&self.0)).expect("serializable")
    }

    fn label(&self) -> String {
        self.0.to_string()
    }
}

pub fn crystal_json<T: CrystalPayload>(graph: &CrystalGraph<T>) -> CrystalJson {
    CrystalJson {
        nodes: graph
            .nodes()
            .iter()
            .enumerate()
            .map(|(id, node)| CrystalNodeJson {
                id,
                weight: node.weight().padded(graph.nvars()).parts().to_vec(),
                payload: node.payload_json(),
            })
            .collect(),
        edges: graph
            .edges()
            .iter()
            .map(|&(src, color, dst)| CrystalEdgeJson { src, color, dst })
            .collect(),
    }
}
