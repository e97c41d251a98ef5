use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generator {0} is not a positive integer")]
    NonPositiveGenerator(i64),
    #[error("generators have gcd {0}; the complement in the nonnegative integers would be infinite")]
    GcdNotOne(i64),
    #[error("the semigroup is all of the nonnegative integers; no Frobenius number exists")]
    IsAllOfN,
    #[error("{0} is not an element of the semigroup")]
    NotAMember(i64),
    #[error("arithmetic overflow")]
    Overflow,
    #[error("generators must be strictly increasing")]
    NotSorted,
    #[error("expected embedding dimension 3, found {0}")]
    WrongEmbeddingDimension(usize),
    #[error("triple is not basic: the differences to the multiplicity share a common factor")]
    NotBasic,
}
