//! Decision procedures, exact derivation search and size invariants for
//! finitely presented (and oracle-presented) monoids and groups.
//!
//! Modules:
//! - [`words`]: alphabets, words, free reduction
//! - [`presentations`]: monoid/group presentations, oracles, builtins
//! - [`rewrite`]: one-step rewriting and minimum-cost derivation search
//! - [`invariants`]: derivation-length/work/area tables and comparators
//! - [`decision`]: bounded word, conjugacy and membership solvers
//! - [`tietze`]: presentation transformations and their size effects
//! - [`diagrams`]: planar derivation diagrams
pub mod words;
pub mod presentations;
pub mod rewrite;
pub mod decision;
pub mod invariants;
pub mod tietze;
pub mod diagrams;

pub use presentations::{builtin, Kind, Presentation, Rule, RuleOrigin, RuleSource};
pub use rewrite::{CostModel, Derivation, SearchCaps, SearchResult};
pub use words::{Alphabet, RelationPair, Word};
