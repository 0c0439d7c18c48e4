use std::fmt;

/// Errors surfaced by the algebra kernel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operands live in different polynomial rings.
    RingMismatch(String),
    /// Graded computation requested on inhomogeneous input.
    NotHomogeneous(String),
    /// Colon or saturation by the zero ideal.
    ZeroIdeal,
    /// The ideal contains 1, so the quotient ring is zero.
    EmptyScheme,
    /// Finite colength required but the quotient is infinite-dimensional.
    InfiniteColength(usize),
    /// Operation outside the supported fragment.
    Unsupported(String),
    /// Invalid construction data (bad weights, duplicate variables, ...).
    Invalid(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RingMismatch(msg) => write!(f, "ring mismatch: {msg}"),
            Error::NotHomogeneous(msg) => write!(
                f,
                "graded resolution requires weighted-homogeneous generators: {msg}"
            ),
            Error::ZeroIdeal => write!(f, "colon/saturation by the zero ideal"),
            Error::EmptyScheme => write!(f, "empty scheme: the ideal contains 1"),
            Error::InfiniteColength(l) => {
                write!(f, "infinite colength at power {l}")
            }
            Error::Unsupported(msg) => write!(f, "unsupported: {msg}"),
            Error::Invalid(msg) => write!(f, "invalid input: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
