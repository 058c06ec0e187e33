//! Partially commutative groups (right-angled Artin groups) presented by
//! finite simple graphs.
//!
//! The crate decides whether A(Γ) is Howson, which for these groups is the
//! same as being fully residually free, being a free product of free-abelian
//! groups, not containing Z × F2, and Γ having no full subgraph that is a path
//! on three vertices. Around that classifier it provides the word problem,
//! parabolic ("visible") subgroups with their retractions, Stallings automata
//! for subgroups of free groups, and an explicit family of certificates that
//! Z × F2 is not Howson.

pub mod characterization;
pub mod error;
pub mod graph;
pub mod stallings;
pub mod visible;
pub mod words;
pub mod zf2;

pub use characterization::{
    classify, embeds_in, max_abelian_rank, ClassificationReport, ExplicitCatalogEntry,
};
pub use error::{Error, Result};
pub use graph::{find_induced_embedding, InducedEmbedding, SimpleGraph};
pub use stallings::StallingsGraph;
pub use visible::VertexRestriction;
pub use words::{are_equal, normal_form, support, Letter, NormalWord, Sign, Word};
pub use zf2::{certify_not_fg, eval_k_word, intersection_ball, NonFgCertificate, ZF2Element};
