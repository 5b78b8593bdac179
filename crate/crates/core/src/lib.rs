//! Counting smooth words, smooth cyclic words and smooth necklaces.
//!
//! A word over `[k] = {1, ..., k}` is *smooth* when adjacent letters differ
//! by at most one, and *smooth cyclic* when additionally its last and first
//! letters do. Smooth necklaces are smooth cyclic words up to rotation.
//!
//! Four independent pipelines compute the same numbers:
//!
//! - [`wordcore`]: exhaustive enumeration (the oracle),
//! - [`transfer`]: exact powers of the tridiagonal transfer matrix,
//! - [`genfunc`]: rational generating functions built from Chebyshev data,
//! - [`spectral`]: trigonometric eigenvalue sums with validated rounding.
//!
//! [`count`] dispatches between them and [`check`] cross-validates them.

pub mod chebyshev;
pub mod check;
pub mod genfunc;
pub mod poly;
pub mod spectral;
pub mod transfer;
pub mod wordcore;

use std::fmt;
use std::str::FromStr;

use num_traits::Signed;
use thiserror::Error;

pub use genfunc::{RationalSeries, SeriesError};
pub use poly::IntPolynomial;
pub use spectral::{SpectralError, Spectrum};
pub use transfer::{TransferError, TransferMatrix};
pub use wordcore::{Word, WordError};

/// Exact nonnegative count.
pub type BigCount = num_bigint::BigUint;

/// Which objects are being counted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Smooth words.
    Sw,
    /// Smooth cyclic words.
    Scw,
    /// Smooth necklaces.
    Sn,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Sw, Family::Scw, Family::Sn];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Sw => "sw",
            Family::Scw => "scw",
            Family::Sn => "sn",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sw" => Ok(Family::Sw),
            "scw" => Ok(Family::Scw),
            "sn" => Ok(Family::Sn),
            other => Err(format!("unknown family `{other}` (expected sw, scw or sn)")),
        }
    }
}

/// Counting pipeline.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Auto,
    Bruteforce,
    /// Transfer-matrix powers; for necklaces, Burnside over matrix traces.
    Matrix,
    /// Generating-function coefficients; for necklaces, Burnside over them.
    Gf,
    Spectral,
}

impl Method {
    /// Every concrete pipeline, in `auto` preference order.
    pub const CONCRETE: [Method; 4] = [
        Method::Matrix,
        Method::Gf,
        Method::Spectral,
        Method::Bruteforce,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::Bruteforce => "bruteforce",
            Method::Matrix => "matrix",
            Method::Gf => "gf",
            Method::Spectral => "spectral",
        }
    }

    /// Whether this pipeline accepts `(n, k)` at all.
    pub fn admits(self, n: usize, k: usize) -> bool {
        match self {
            Method::Auto | Method::Matrix | Method::Gf => k >= 1,
            Method::Bruteforce => wordcore::enumeration_admits(n, k),
            Method::Spectral => spectral::window_admits(n, k),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "auto" => Ok(Method::Auto),
            "bruteforce" => Ok(Method::Bruteforce),
            "matrix" => Ok(Method::Matrix),
            "gf" => Ok(Method::Gf),
            "spectral" => Ok(Method::Spectral),
            other => Err(format!("unknown method `{other}`")),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CountError {
    #[error("alphabet size must be at least 1")]
    EmptyAlphabet,
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

/// A count together with the pipeline that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counted {
    pub value: BigCount,
    pub method: Method,
}

/// Counts `family` objects of length `n` over `[k]` with the chosen pipeline.
///
/// `Method::Auto` resolves to `Method::Matrix`.
pub fn count(family: Family, n: usize, k: usize, method: Method) -> Result<Counted, CountError> {
    if k == 0 {
        return Err(CountError::EmptyAlphabet);
    }
    let method = if method == Method::Auto {
        Method::Matrix
    } else {
        method
    };
    let value = match method {
        Method::Auto => unreachable!(),
        Method::Bruteforce => match family {
            Family::Sw => wordcore::count_smooth_bf(n, k)?,
            Family::Scw => wordcore::count_cyclic_bf(n, k)?,
            Family::Sn => wordcore::count_necklaces_bf(n, k)?,
        },
        Method::Matrix => match family {
            Family::Sw => transfer::sw_exact(n, k),
            Family::Scw => transfer::scw_exact(n, k),
            Family::Sn => transfer::necklace_exact(n, k),
        },
        Method::Gf => match family {
            Family::Sw => series_term(&genfunc::sw_gf(k), n),
            Family::Scw => series_term(&genfunc::scw_gf(k), n),
            Family::Sn => {
                let coeffs = genfunc::scw_gf(k).coeffs(n);
                transfer::necklace_from_cyclic(n, |d| to_count(&coeffs[d]))
            }
        },
        Method::Spectral => spectral::count_validated(family, n, k)?,
    };
    Ok(Counted { value, method })
}

fn to_count(c: &num_bigint::BigInt) -> BigCount {
    assert!(
        !c.is_negative(),
        "counting series produced a negative coefficient"
    );
    c.magnitude().clone()
}

fn series_term(rs: &RationalSeries, n: usize) -> BigCount {
    to_count(&rs.coeffs(n)[n])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dispatch_examples() {
        let c = count(Family::Sw, 11, 3, Method::Auto).unwrap();
        assert_eq!(c.value, 19601u32.into());
        assert_eq!(c.method, Method::Matrix);
        assert_eq!(
            count(Family::Sn, 0, 5, Method::Auto).unwrap().value,
            1u32.into()
        );
        assert_eq!(
            count(Family::Scw, 8, 6, Method::Spectral).unwrap().value,
            4468u32.into()
        );
        assert_eq!(
            count(Family::Sn, 9, 6, Method::Gf).unwrap().value,
            1360u32.into()
        );
        assert_eq!(
            count(Family::Sw, 3, 0, Method::Matrix),
            Err(CountError::EmptyAlphabet)
        );
        assert!(matches!(
            count(Family::Sw, 40, 3, Method::Spectral),
            Err(CountError::Spectral(SpectralError::OutsideWindow { .. }))
        ));
        assert!(matches!(
            count(Family::Sw, 40, 3, Method::Bruteforce),
            Err(CountError::Word(WordError::TooLarge { .. }))
        ));
    }

    #[test]
    fn names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.as_str().parse::<Family>().unwrap(), f);
        }
        for m in Method::CONCRETE.into_iter().chain([Method::Auto]) {
            assert_eq!(m.as_str().parse::<Method>().unwrap(), m);
        }
        assert!("xyz".parse::<Family>().is_err());
    }
}
