//! Visible (parabolic) subgroups.
//!
//! For a vertex subset `Y` of Γ, the subgroup of A(Γ) generated by `Y` is a
//! copy of A(Γ[Y]). The inclusion `alpha` and the retraction `rho` (which
//! kills every generator outside `Y`) compose to the identity on A(Γ[Y]).

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::words::{normal_form, support, NormalWord, Word};

/// An ambient graph together with a vertex subset and its full subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexRestriction {
    ambient: SimpleGraph,
    ys: BTreeSet<String>,
    induced: SimpleGraph,
}

impl VertexRestriction {
    pub fn new<'a>(ambient: SimpleGraph, ys: impl IntoIterator<Item = &'a str>) -> Result<Self> {
        let ys: BTreeSet<String> = ys.into_iter().map(str::to_string).collect();
        let induced = ambient.induced_subgraph(ys.iter().map(String::as_str))?;
        Ok(Self {
            ambient,
            ys,
            induced,
        })
    }

    pub fn ambient(&self) -> &SimpleGraph {
        &self.ambient
    }

    pub fn subset(&self) -> &BTreeSet<String> {
        &self.ys
    }

    pub fn induced(&self) -> &SimpleGraph {
        &self.induced
    }

    /// The inclusion A(Γ[Y]) → A(Γ). Letters are kept as they are.
    pub fn alpha_include(&self, w: &Word) -> Result<Word> {
        if let Some(l) = w
            .letters()
            .iter()
            .find(|l| !self.ys.contains(&*l.generator))
        {
            return Err(Error::OutsideSubset(l.generator.to_string()));
        }
        Ok(w.clone())
    }

    /// The retraction A(Γ) → A(Γ[Y]): letters outside `Y` are deleted.
    pub fn rho_retract(&self, w: &Word) -> Word {
        w.letters()
            .iter()
            .filter(|l| self.ys.contains(&*l.generator))
            .cloned()
            .collect()
    }

    /// Whether `w` lies in the subgroup generated by `Y`: its normal form
    /// only uses generators from `Y`.
    pub fn is_in_visible(&self, w: &Word) -> Result<bool> {
        Ok(support(w, &self.ambient)?.is_subset(&self.ys))
    }

    /// On membership, the element rewritten as a normal word over Γ[Y].
    pub fn visible_normal_form(&self, w: &Word) -> Result<Option<NormalWord>> {
        let nf = normal_form(w, &self.ambient)?;
        if !nf.letters().iter().all(|l| self.ys.contains(&*l.generator)) {
            return Ok(None);
        }
        normal_form(nf.as_word(), &self.induced).map(Some)
    }
}
