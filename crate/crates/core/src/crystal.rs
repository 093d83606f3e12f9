//! Generic edge-colored crystal graphs, Demazure truncation, and the
//! decomposition of reduced factorizations with cutoff into Demazure pieces.
//!
//! Graphs are values: nodes are stored in canonical (sorted) order and edges
//! follow the lowering orientation, so `(u, i, v)` means `f_i(u) = v`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::composition::{sort_composition, Partition, WeakComposition};
use crate::eg::weak_eg;
use crate::factorization::{enumerate_rfc, ReducedFactorization};
use crate::key::{enumerate_sskt, KeyTableau};
use crate::perm::{is_reduced, Permutation, Word};
use crate::poly::SparsePolynomial;
use crate::ssyt::Ssyt;

/// An element of a crystal: partial raising and lowering operators that are
/// mutually inverse, and a weight.
pub trait CrystalElement: Clone + Ord {
    fn raise(&self, i: usize) -> Option<Self>;
    fn lower(&self, i: usize) -> Option<Self>;
    fn weight(&self) -> WeakComposition;
}

impl CrystalElement for Ssyt {
    fn raise(&self, i: usize) -> Option<Self> {
        Ssyt::raise(self, i)
    }

    fn lower(&self, i: usize) -> Option<Self> {
        Ssyt::lower(self, i)
    }

    fn weight(&self) -> WeakComposition {
        Ssyt::weight(self)
    }
}

impl CrystalElement for KeyTableau {
    fn raise(&self, i: usize) -> Option<Self> {
        KeyTableau::raise(self, i)
    }

    fn lower(&self, i: usize) -> Option<Self> {
        KeyTableau::lower(self, i)
    }

    fn weight(&self) -> WeakComposition {
        KeyTableau::weight(self)
    }
}

/// A reduced factorization carrying the free crystal operators.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct RfElement(pub ReducedFactorization);

/// A reduced factorization carrying the cutoff-restricted operators.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct RfcElement(pub ReducedFactorization);

impl CrystalElement for RfElement {
    fn raise(&self, i: usize) -> Option<Self> {
        self.0.raise(i, false).map(RfElement)
    }

    fn lower(&self, i: usize) -> Option<Self> {
        self.0.lower(i, false).map(RfElement)
    }

    fn weight(&self) -> WeakComposition {
        self.0.weight()
    }
}

impl CrystalElement for RfcElement {
    fn raise(&self, i: usize) -> Option<Self> {
        self.0.raise(i, true).map(RfcElement)
    }

    fn lower(&self, i: usize) -> Option<Self> {
        self.0.lower(i, true).map(RfcElement)
    }

    fn weight(&self) -> WeakComposition {
        self.0.weight()
    }
}

impl fmt::Display for RfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Display for RfcElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An edge-colored crystal graph with canonical node order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CrystalGraph<T> {
    nodes: Vec<T>,
    edges: BTreeSet<(usize, usize, usize)>,
    lower_map: BTreeMap<(usize, usize), usize>,
    colors: usize,
    nvars: usize,
}

/// A Demazure-truncated subset of a crystal graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DemazureSubset {
    members: BTreeSet<usize>,
    word: Word,
}

/// Errors from crystal construction and truncation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CrystalError {
    OperatorInconsistency(String),
    NonReducedWord,
    NotHighestWeight,
    UnknownNode,
}

impl fmt::Display for CrystalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CrystalError::OperatorInconsistency(what) => {
                write!(f, "operator inconsistency: {what}")
            }
            CrystalError::NonReducedWord => write!(f, "truncation word is not reduced"),
            CrystalError::NotHighestWeight => write!(f, "seed is not a highest weight node"),
            CrystalError::UnknownNode => write!(f, "node does not belong to the graph"),
        }
    }
}

impl core::error::Error for CrystalError {}

/// Closes the seeds under raising and lowering with colors `1..=colors` and
/// assembles the graph.  Fails when the operators are not mutually inverse
/// or violate the weight law.
pub fn build_crystal<T: CrystalElement>(
    seeds: impl IntoIterator<Item = T>,
    colors: usize,
    nvars: usize,
) -> Result<CrystalGraph<T>, CrystalError> {
    let mut elements: BTreeSet<T> = seeds.into_iter().collect();
    let mut frontier: Vec<T> = elements.iter().cloned().collect();
    while let Some(x) = frontier.pop() {
        for i in 1..=colors {
            for neighbor in [x.lower(i), x.raise(i)].into_iter().flatten() {
                if elements.insert(neighbor.clone()) {
                    frontier.push(neighbor);
                }
            }
        }
    }
    let nodes: Vec<T> = elements.into_iter().collect();
    let mut edges = BTreeSet::new();
    let mut lower_map = BTreeMap::new();
    for (src, x) in nodes.iter().enumerate() {
        for i in 1..=colors {
            if let Some(y) = x.lower(i) {
                let dst = nodes.binary_search(&y).map_err(|_| {
                    CrystalError::OperatorInconsistency(format!(
                        "f_{i} left the closure from node {src}"
                    ))
                })?;
                if y.raise(i).as_ref() != Some(x) {
                    return Err(CrystalError::OperatorInconsistency(format!(
                        "e_{i} does not invert f_{i} at node {src}"
                    )));
                }
                let wx = x.weight().padded(nvars);
                let wy = y.weight().padded(nvars);
                let law = (1..=nvars).all(|j| {
                    let expected = if j == i {
                        wx.part(j).checked_sub(1)
                    } else if j == i + 1 {
                        Some(wx.part(j) + 1)
                    } else {
                        Some(wx.part(j))
                    };
                    Some(wy.part(j)) == expected
                });
                if !law {
                    return Err(CrystalError::OperatorInconsistency(format!(
                        "f_{i} violates the weight law at node {src}"
                    )));
                }
                edges.insert((src, i, dst));
                lower_map.insert((src, i), dst);
            }
        }
    }
    Ok(CrystalGraph {
        nodes,
        edges,
        lower_map,
        colors,
        nvars,
    })
}

impl<T: CrystalElement> CrystalGraph<T> {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[T] {
        &self.nodes
    }

    pub fn node(&self, id: usize) -> &T {
        &self.nodes[id]
    }

    pub fn node_id(&self, x: &T) -> Option<usize> {
        self.nodes.binary_search(x).ok()
    }

    /// Edges `(src, color, dst)` in the lowering orientation.
    pub fn edges(&self) -> &BTreeSet<(usize, usize, usize)> {
        &self.edges
    }

    pub fn colors(&self) -> usize {
        self.colors
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn lower_edge(&self, src: usize, color: usize) -> Option<usize> {
        self.lower_map.get(&(src, color)).copied()
    }

    pub fn raise_edge(&self, dst: usize, color: usize) -> Option<usize> {
        self.edges
            .iter()
            .find(|&&(_, c, d)| c == color && d == dst)
            .map(|&(s, _, _)| s)
    }

    /// Nodes on which every raising operator is absent.
    pub fn highest_weight_nodes(&self) -> Vec<usize> {
        (0..self.nodes.len())
            .filter(|&id| (1..=self.colors).all(|i| self.nodes[id].raise(i).is_none()))
            .collect()
    }

    /// Weakly connected components, each sorted, ordered by smallest node.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.nodes.len()).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let root = find(parent, parent[x]);
                parent[x] = root;
            }
            parent[x]
        }
        for &(s, _, d) in &self.edges {
            let rs = find(&mut parent, s);
            let rd = find(&mut parent, d);
            if rs != rd {
                parent[rs] = rd;
            }
        }
        let mut grouped: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for id in 0..self.nodes.len() {
            let root = find(&mut parent, id);
            grouped.entry(root).or_default().push(id);
        }
        grouped.into_values().collect()
    }

    /// The weight generating polynomial over all nodes.
    pub fn character(&self) -> SparsePolynomial {
        let mut out = SparsePolynomial::zero(self.nvars);
        for node in &self.nodes {
            out.add_term(node.weight().padded(self.nvars).parts().to_vec(), 1);
        }
        out
    }

    /// The weight generating polynomial over a subset.
    pub fn subset_character(&self, subset: &DemazureSubset) -> SparsePolynomial {
        let mut out = SparsePolynomial::zero(self.nvars);
        for &id in &subset.members {
            out.add_term(self.nodes[id].weight().padded(self.nvars).parts().to_vec(), 1);
        }
        out
    }
}

impl DemazureSubset {
    pub fn members(&self) -> &BTreeSet<usize> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn contains(&self, id: usize) -> bool {
        self.members.contains(&id)
    }
}

/// The Demazure truncation `B_w = D_{i_1} ... D_{i_k} {seed}`, the rightmost
/// letter applied first.  `D_i` closes a set under lowering along color `i`.
pub fn demazure_truncate<T: CrystalElement>(
    graph: &CrystalGraph<T>,
    seed: usize,
    word: &[usize],
) -> Result<DemazureSubset, CrystalError> {
    if seed >= graph.len() {
        return Err(CrystalError::UnknownNode);
    }
    if !is_reduced(word, graph.colors() + 1) {
        return Err(CrystalError::NonReducedWord);
    }
    if (1..=graph.colors()).any(|i| graph.node(seed).raise(i).is_some()) {
        return Err(CrystalError::NotHighestWeight);
    }
    let mut members = BTreeSet::from([seed]);
    for &i in word.iter().rev() {
        let mut grown = members.clone();
        for &id in &members {
            let mut current = id;
            while let Some(next) = graph.lower_edge(current, i) {
                grown.insert(next);
                current = next;
            }
        }
        members = grown;
    }
    Ok(DemazureSubset {
        members,
        word: word.to_vec(),
    })
}

/// One Demazure component of `RFC(w)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RfcComponent {
    /// The highest weight factorization of the component.
    pub highest_weight: ReducedFactorization,
    /// Its weight, a partition.
    pub weight: Partition,
    /// The key shape of its weak insertion tableau.
    pub shape: WeakComposition,
    /// The canonical reduced word sorting that shape.
    pub sorting_word: Word,
    /// Component size.
    pub size: usize,
}

/// Decomposes `RFC(w)` into its crystal components, one entry per highest
/// weight element.
pub fn decompose_rfc(w: &Permutation) -> Vec<RfcComponent> {
    let graph = rfc_graph(w);
    let mut out = Vec::new();
    for component in graph.components() {
        for &id in &component {
            if (1..=graph.colors()).any(|i| graph.node(id).raise(i).is_some()) {
                continue;
            }
            let hw = graph.node(id).0.clone();
            let pair = weak_eg(&hw).expect("factorizations of reduced words");
            let shape = pair.p_hat.shape();
            let (_, _, sorting_word) = sort_composition(&shape);
            let weight = Partition::new(hw.weight().trimmed().parts().to_vec())
                .expect("highest weights are partitions");
            out.push(RfcComponent {
                highest_weight: hw,
                weight,
                shape,
                sorting_word,
                size: component.len(),
            });
        }
    }
    out.sort_by(|a, b| a.highest_weight.cmp(&b.highest_weight));
    out
}

/// Builds the cutoff crystal on `RFC(w)` with colors `1..n-1`.
pub fn rfc_graph(w: &Permutation) -> CrystalGraph<RfcElement> {
    let n = w.n();
    build_crystal(
        enumerate_rfc(w).into_iter().map(RfcElement),
        n.saturating_sub(1),
        n,
    )
    .expect("cutoff operators form a crystal")
}

/// The verification report for one component of `RFC(w)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComponentCheck {
    pub component: RfcComponent,
    pub failures: Vec<String>,
}

impl ComponentCheck {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// The full report of [`verify_demazure_isomorphism`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DemazureIsomorphismReport {
    pub components: Vec<ComponentCheck>,
    pub total_nodes: usize,
}

impl DemazureIsomorphismReport {
    pub fn pass(&self) -> bool {
        self.components.iter().all(|c| c.pass())
    }
}

/// Certifies that `RFC(w)` is a union of Demazure crystals: every component
/// maps under the weak insertion recording tableau onto the semi-standard key
/// tableaux of its shape, edges and weights agree, and a basepointed walk
/// matches the component against the Demazure truncation of the ambient
/// highest weight crystal.
pub fn verify_demazure_isomorphism(w: &Permutation) -> DemazureIsomorphismReport {
    let graph = rfc_graph(w);
    let mut checks = Vec::new();
    for component in graph.components() {
        let mut failures: Vec<String> = Vec::new();
        let hws: Vec<usize> = component
            .iter()
            .copied()
            .filter(|&id| (1..=graph.colors()).all(|i| graph.node(id).raise(i).is_none()))
            .collect();
        if hws.len() != 1 {
            failures.push(format!("{} highest weight elements", hws.len()));
            checks.push(ComponentCheck {
                component: RfcComponent {
                    highest_weight: graph.node(component[0]).0.clone(),
                    weight: Partition::empty(),
                    shape: WeakComposition::new(Vec::new()),
                    sorting_word: Vec::new(),
                    size: component.len(),
                },
                failures,
            });
            continue;
        }
        let hw_id = hws[0];
        let hw = graph.node(hw_id).0.clone();
        let pair = weak_eg(&hw).expect("factorizations of reduced words");
        let shape = pair.p_hat.shape();
        let alphabet = shape.len();
        let (lambda, _, sorting_word) = sort_composition(&shape);
        let weight = hw.weight();
        if weight.trimmed() != lambda.trimmed().as_composition() {
            failures.push(format!(
                "highest weight {weight} does not sort the shape {shape}"
            ));
        }

        // the recording map onto SSKT(shape): bijective, weight-preserving,
        // intertwining every raising operator (absence included)
        let mut recording: BTreeMap<usize, KeyTableau> = BTreeMap::new();
        for &id in &component {
            let t = weak_eg(&graph.node(id).0)
                .expect("factorizations of reduced words")
                .q_hat;
            if t.weight().trimmed() != graph.node(id).weight().trimmed() {
                failures.push(format!("recording tableau changes the weight at node {id}"));
            }
            recording.insert(id, t);
        }
        let image: BTreeSet<KeyTableau> = recording.values().cloned().collect();
        if image.len() != component.len() {
            failures.push("recording map is not injective".into());
        }
        let sskt = enumerate_sskt(&shape);
        if image != sskt {
            failures.push(format!(
                "recording image has {} tableaux, SSKT({shape}) has {}",
                image.len(),
                sskt.len()
            ));
        }
        for &id in &component {
            for i in 1..=graph.colors() {
                let lhs = graph.node(id).raise(i).map(|r| {
                    weak_eg(&r.0).expect("factorizations of reduced words").q_hat
                });
                let rhs = recording[&id].raise(i);
                if lhs != rhs {
                    failures.push(format!("e_{i} fails to intertwine at node {id}"));
                }
            }
        }

        // basepointed walk onto the Demazure truncation of B(lambda)
        match Ssyt::highest_weight(&lambda, alphabet) {
            Some(u) => {
                let ambient = build_crystal([u.clone()], alphabet.saturating_sub(1), alphabet)
                    .expect("tableau operators form a crystal");
                let u_id = ambient.node_id(&u).expect("seed is a node");
                match demazure_truncate(&ambient, u_id, &sorting_word) {
                    Ok(subset) => {
                        if let Err(msg) =
                            basepointed_walk(&graph, hw_id, &component, &ambient, &subset, u_id)
                        {
                            failures.push(msg);
                        }
                        let subset_char = ambient.subset_character(&subset);
                        let kappa = crate::poly::demazure_character(&shape);
                        if subset_char != kappa {
                            failures.push("truncation character differs from the Demazure character".into());
                        }
                    }
                    Err(e) => failures.push(format!("truncation failed: {e}")),
                }
            }
            None => failures.push("highest weight tableau does not exist".into()),
        }

        checks.push(ComponentCheck {
            component: RfcComponent {
                highest_weight: hw,
                weight: Partition::new(weight.trimmed().parts().to_vec())
                    .unwrap_or_else(Partition::empty),
                shape,
                sorting_word,
                size: component.len(),
            },
            failures,
        });
    }
    checks.sort_by(|a, b| a.component.highest_weight.cmp(&b.component.highest_weight));
    DemazureIsomorphismReport {
        components: checks,
        total_nodes: graph.len(),
    }
}

// Walks both graphs from their basepoints in lockstep.  In the truncation,
// lowering counts as defined only when it stays among the members; this must
// match the cutoff operators exactly, node for node, color for color.
fn basepointed_walk(
    rfc: &CrystalGraph<RfcElement>,
    rfc_root: usize,
    component: &[usize],
    ambient: &CrystalGraph<Ssyt>,
    subset: &DemazureSubset,
    ssyt_root: usize,
) -> Result<(), String> {
    if component.len() != subset.len() {
        return Err(format!(
            "component has {} nodes, truncation has {}",
            component.len(),
            subset.len()
        ));
    }
    let mut paired: BTreeMap<usize, usize> = BTreeMap::from([(rfc_root, ssyt_root)]);
    let mut used: BTreeSet<usize> = BTreeSet::from([ssyt_root]);
    let mut frontier = alloc::vec![(rfc_root, ssyt_root)];
    while let Some((x, y)) = frontier.pop() {
        let wx = rfc.node(x).weight().trimmed();
        let wy = ambient.node(y).weight().trimmed();
        if wx != wy {
            return Err(format!("weight mismatch between nodes {x} and {y}"));
        }
        for i in 1..=rfc.colors() {
            let fx = rfc.lower_edge(x, i);
            let fy = ambient
                .lower_edge(y, i)
                .filter(|next| subset.contains(*next));
            match (fx, fy) {
                (None, None) => {}
                (Some(nx), Some(ny)) => match paired.get(&nx) {
                    Some(&expected) => {
                        if expected != ny {
                            return Err(format!("edge color {i} breaks the bijection at {x}"));
                        }
                    }
                    None => {
                        if !used.insert(ny) {
                            return Err(format!("node {ny} paired twice"));
                        }
                        paired.insert(nx, ny);
                        frontier.push((nx, ny));
                    }
                },
                _ => return Err(format!("f_{i} defined on one side only at ({x}, {y})")),
            }
        }
    }
    if paired.len() != component.len() {
        return Err(format!(
            "walk reached {} of {} component nodes",
            paired.len(),
            component.len()
        ));
    }
    Ok(())
}
