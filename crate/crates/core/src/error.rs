//! Error taxonomy shared by all modules.
//!
//! The variants split into three groups that callers (notably the CLI exit
//! codes) treat differently: malformed input, violated mathematical
//! hypotheses, and data that is too ambiguous to answer honestly.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parameter is outside the documented domain of an operation.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Mutually inconsistent inputs (e.g. a positive width for a space of
    /// total dimension at most one).
    #[error("inconsistent input: {0}")]
    InconsistentInput(String),

    /// The requested case needs the smooth-and-compact ambient hypothesis.
    #[error("missing ambient hypothesis: {0}")]
    MissingAmbientHypothesis(String),

    /// Hom(V, V[d]) does not vanish; no shift can repair this.
    #[error("gap condition fails: Hom(V, V[{d}]) is nonzero")]
    GapConditionFails { d: i64 },

    /// Two cohomology groups overlap in degree, so the rank of a connecting
    /// map cannot be read off. The rank is never guessed.
    #[error("ambiguous connecting map: cohomology supports overlap in degrees {degrees:?}")]
    AmbiguousConnectingMap { degrees: Vec<i64> },

    /// The Hom pattern `q^s (1 + q^d)` is the self-Hom profile of a spherical
    /// object; the pair is rejected as possibly isomorphic up to shift. This
    /// test is a necessary pattern check, not a full isomorphism test.
    #[error(
        "possibly isomorphic pair: Hom pattern is q^{shift} (1 + q^d); this is a \
         necessary pattern test and can reject a genuinely non-isomorphic pair \
         with the same Poincaré polynomial"
    )]
    PossiblyIsomorphicPair { shift: i64 },
}
