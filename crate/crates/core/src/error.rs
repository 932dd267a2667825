use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("could not parse braid word {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("strand count mismatch: B{left} vs B{right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("generator index {index} out of range for B{strands}")]
    IndexOutOfRange { index: usize, strands: usize },

    #[error("invalid pure generator p({i},{j}) for {strands} strands")]
    InvalidPureGen { i: usize, j: usize, strands: usize },

    #[error("braid is not pure")]
    NotPure,

    #[error("pure braid is not in the commutator subgroup")]
    NotInCommutator,

    #[error("free word has nonzero exponent sum in generator x{generator}")]
    NonzeroExponentSum { generator: usize },

    #[error("insertion position {position} out of range for word of length {len}")]
    PositionOutOfRange { position: usize, len: usize },

    #[error("two insertions share position {position}")]
    InsertionConflict { position: usize },

    #[error("invalid delta triple ({h},{i},{j}) for {strands} strands")]
    InvalidTriple {
        h: usize,
        i: usize,
        j: usize,
        strands: usize,
    },

    #[error("closure has {components} components; a knot is required")]
    NotAKnot { components: usize },

    #[error("{strands} strands exceeds the configured bound of {bound}")]
    TooManyStrands { strands: usize, bound: usize },

    #[error("series order {order} exceeds the configured bound of {bound}")]
    OrderTooLarge { order: usize, bound: usize },

    #[error("invariant evaluation failed on subset {subset:?}: {source}")]
    Subset {
        subset: Vec<usize>,
        #[source]
        source: Box<Error>,
    },

    #[error("malformed certificate: {0}")]
    Certificate(String),

    #[error("slide counter is already zero")]
    SlideExhausted,

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
