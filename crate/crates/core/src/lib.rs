//! Finite magmas given by Cayley tables, with their neutrosophic and
//! Smarandache structure.
//!
//! A [`FiniteMagma`] is a labelled operation table. On top of it sit
//!
//! - [`constructors`]: the loops `L_n(m)`, the groupoids `Z_n(t, u)`, `Z_n`
//!   under multiplication, cyclic, symmetric, alternating and dihedral groups,
//!   full transformation semigroups and direct products;
//! - [`neutro`]: the indeterminate `I`, either as a tagged copy `{x, xI}` of a
//!   base magma or as residues `a + bI` over `Z_n`;
//! - [`laws`], [`ops`], [`search`] and [`species`]: identity checks, nuclei,
//!   cosets, normality, ideals, conjugacy, isotopes and closed-subset search;
//! - [`classify`]: Smarandache detection and the Lagrange, Sylow and Cauchy
//!   engines, all returning a [`classify::Verdict3`];
//! - [`nstruct`]: N-structures, disjoint unions with one operation per
//!   component;
//! - [`atlas`] and [`corpus`]: family sweeps and the worked-example checks.
//!
//! The cargo examples walk through each area:
//!
//! | example | shows |
//! |---|---|
//! | `ln_loops` | class sizes, identities and nuclei of `L_n(m)` |
//! | `zn_groupoids` | `Z_n(t, u)` classes, ideals, normal subgroupoids |
//! | `neutrosophic_cosets` | `<Z_5 ∪ I>` and cosets of (pseudo) neutrosophic subgroups |
//! | `conjugacy` | conjugating sets and conjugate pairs |
//! | `classification_engines` | S-kinds and Lagrange/Sylow/Cauchy verdicts |
//! | `n_structures` | bistructures, N-cosets, deficit substructures |
//! | `isotopes_isomorphism` | principal isotopes, isomorphism, homomorphisms |
//! | `atlas` | CSV sweep of the `L_n` and `Z*(n)` families |
//! | `corpus` | the worked-example corpus with an optional id glob |

pub mod atlas;
pub mod classify;
pub mod commands;
pub mod constructors;
pub mod corpus;
pub mod error;
pub mod laws;
pub mod magma;
pub mod neutro;
pub mod nstruct;
pub mod ops;
pub mod search;
pub mod species;

pub use error::{Error, Result};
pub use magma::{FiniteMagma, Subset};
