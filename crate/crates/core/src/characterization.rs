//! The Howson classification of PC-groups and the catalog of explicit graphs.
//!
//! For a finite graph Γ the following are equivalent: A(Γ) is fully
//! residually free; A(Γ) is Howson; A(Γ) does not contain Z × F2; A(Γ) is a
//! free product of free-abelian groups; every endomorphism has finitely
//! generated fixed and periodic subgroups. On the graph side this is Γ having
//! no full subgraph isomorphic to the path on three vertices.
//!
//! A graph Λ is *explicit* when A(Λ) ≤ A(Γ) holds exactly when Λ is a full
//! subgraph of Γ, for every Γ. Only for those graphs can group embedding be
//! decided by subgraph search; [`ExplicitCatalogEntry`] lists the known ones.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{find_induced_embedding, SimpleGraph};

/// Verdicts for every condition of the classification, with a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub p3_free: bool,
    pub fully_residually_free: bool,
    pub howson: bool,
    pub contains_z_cross_f2: bool,
    pub free_product_of_free_abelian: bool,
    /// Ranks of the free-abelian free factors, descending.
    pub factor_ranks: Option<Vec<usize>>,
    /// An induced path `x - y - z`.
    pub p3_witness: Option<[String; 3]>,
    pub fix_points_fg: bool,
    pub per_points_fg: bool,
    pub max_abelian_rank: usize,
}

/// Classifies A(`g`).
///
/// The graph-side conditions are computed separately (P3 search, clique
/// decomposition, P3 embedding through the explicit catalog) so their
/// agreement is observable rather than assumed.
pub fn classify(g: &SimpleGraph) -> ClassificationReport {
    let p3_witness = g.find_induced_p3();
    let factor_ranks = g.complete_decomposition();
    let contains_z_cross_f2 = embeds_in(&ExplicitCatalogEntry::p3(), g);

    let p3_free = p3_witness.is_none();
    let free_product_of_free_abelian = factor_ranks.is_some();
    // Free products of free-abelian groups are fully residually free, and
    // (for finite graphs) have finitely generated Fix and Per subgroups.
    let fully_residually_free = free_product_of_free_abelian;
    // Z x F2 is presented by P3 and is not Howson; A(P3) lies in A(g) exactly
    // when P3 is a full subgraph of g.
    let howson = p3_free;

    ClassificationReport {
        p3_free,
        fully_residually_free,
        howson,
        contains_z_cross_f2,
        free_product_of_free_abelian,
        factor_ranks,
        p3_witness,
        fix_points_fg: free_product_of_free_abelian,
        per_points_fg: free_product_of_free_abelian,
        max_abelian_rank: max_abelian_rank(g),
    }
}

impl ClassificationReport {
    /// Whether all the equivalent conditions agree and exactly one witness is
    /// present.
    pub fn is_coherent(&self) -> bool {
        let v = self.howson;
        self.p3_free == v
            && self.fully_residually_free == v
            && self.free_product_of_free_abelian == v
            && self.contains_z_cross_f2 == !v
            && self.fix_points_fg == v
            && self.per_points_fg == v
            && self.factor_ranks.is_some() != self.p3_witness.is_some()
    }
}

/// Maximum rank of a free-abelian subgroup of A(`g`): the clique number.
pub fn max_abelian_rank(g: &SimpleGraph) -> usize {
    g.clique_number()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogShape {
    Complete(usize),
    P3,
    P4,
    C4,
    /// Edgeless graph on 0, 1 or 2 vertices.
    Edgeless(usize),
}

impl fmt::Display for CatalogShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogShape::Complete(n) => write!(f, "K{n}"),
            CatalogShape::P3 => f.write_str("P3"),
            CatalogShape::P4 => f.write_str("P4"),
            CatalogShape::C4 => f.write_str("C4"),
            CatalogShape::Edgeless(n) => write!(f, "edgeless_{n}"),
        }
    }
}

/// A graph known to be explicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplicitCatalogEntry {
    pub shape: CatalogShape,
    pub pattern: SimpleGraph,
    pub provenance: &'static str,
}

impl ExplicitCatalogEntry {
    pub fn complete(n: usize) -> Self {
        let pattern = SimpleGraph::complete(crate::graph::default_names(n)).unwrap();
        Self {
            shape: CatalogShape::Complete(n),
            pattern,
            provenance: "the maximal rank of a free-abelian subgroup equals the clique number",
        }
    }

    pub fn p3() -> Self {
        Self {
            shape: CatalogShape::P3,
            pattern: SimpleGraph::path(["a", "b", "c"]).unwrap(),
            provenance: "Z x F2 embeds exactly when the PC-group is not a free product of free-abelian groups",
        }
    }

    pub fn p4() -> Self {
        Self {
            shape: CatalogShape::P4,
            pattern: SimpleGraph::path(["a", "b", "c", "d"]).unwrap(),
            provenance: "A(P4) embeds exactly when P4 is a full subgraph",
        }
    }

    pub fn c4() -> Self {
        Self {
            shape: CatalogShape::C4,
            pattern: SimpleGraph::cycle(["a", "b", "c", "d"]).unwrap(),
            provenance: "A(C4) = F2 x F2 embeds exactly when C4 is a full subgraph",
        }
    }

    /// Edgeless graphs are explicit only on at most two vertices.
    pub fn edgeless(n: usize) -> Result<Self> {
        let provenance = match n {
            0 => "trivial group",
            1 => "infinite cyclic group",
            2 => "F2 embeds exactly in the non-abelian PC-groups",
            _ => return Err(Error::NotExplicit),
        };
        Ok(Self {
            shape: CatalogShape::Edgeless(n),
            pattern: SimpleGraph::edgeless(crate::graph::default_names(n)).unwrap(),
            provenance,
        })
    }

    /// Every explicit shape with at most `max_complete` vertices in the
    /// complete family.
    pub fn catalog(max_complete: usize) -> Vec<Self> {
        let mut out: Vec<Self> = (0..=2).map(|n| Self::edgeless(n).unwrap()).collect();
        out.extend((2..=max_complete).map(Self::complete));
        out.extend([Self::p3(), Self::p4(), Self::c4()]);
        out
    }

    /// Looks a shape up by name: `K<n>`, `P3`, `P4`, `C4` or `edgeless_<n>`.
    pub fn by_name(name: &str) -> Result<Self> {
        match name {
            "P3" => return Ok(Self::p3()),
            "P4" => return Ok(Self::p4()),
            "C4" => return Ok(Self::c4()),
            _ => {}
        }
        if let Some(n) = name.strip_prefix('K').and_then(|n| n.parse().ok()) {
            return Ok(Self::complete(n));
        }
        if let Some(n) = name.strip_prefix("edgeless_").and_then(|n| n.parse().ok()) {
            return Self::edgeless(n);
        }
        Err(Error::NotExplicit)
    }

    /// Matches an arbitrary graph against the catalog up to isomorphism.
    pub fn recognize(pattern: &SimpleGraph) -> Result<Self> {
        let n = pattern.vertex_count();
        let candidates = [
            Self::edgeless(n).ok(),
            (n >= 1).then(|| Self::complete(n)),
            Some(Self::p3()),
            Some(Self::p4()),
            Some(Self::c4()),
        ];
        candidates
            .into_iter()
            .flatten()
            .find(|entry| {
                entry.pattern.vertex_count() == n
                    && entry.pattern.edge_count() == pattern.edge_count()
                    && find_induced_embedding(&entry.pattern, pattern).is_some()
            })
            .ok_or(Error::NotExplicit)
    }

    pub fn name(&self) -> String {
        self.shape.to_string()
    }
}

/// Whether A(entry) embeds in A(`host`), for an explicit pattern.
pub fn embeds_in(entry: &ExplicitCatalogEntry, host: &SimpleGraph) -> bool {
    match entry.shape {
        CatalogShape::Complete(n) => host.clique_number() >= n,
        _ => find_induced_embedding(&entry.pattern, host).is_some(),
    }
}

/// [`embeds_in`] for a pattern given as a graph; rejects non-explicit ones.
pub fn embeds_in_graph(pattern: &SimpleGraph, host: &SimpleGraph) -> Result<bool> {
    Ok(embeds_in(&ExplicitCatalogEntry::recognize(pattern)?, host))
}
