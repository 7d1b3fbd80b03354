//! Connectivity invariants of local cohomology for explicit polynomial
//! ideals: exact Gröbner bases, minimal primes, canonical modules, the
//! graph of top-dimensional components and the top Lyubeznik number.
//!
//! ```
//! use lyco::{Ideal, RingCtx};
//! use lyco::connectivity::lyubeznik_top;
//!
//! let r = RingCtx::rational(&["x", "y", "z", "w"]);
//! let i = Ideal::parse(&r, "x, y")?.intersect(&Ideal::parse(&r, "z, w")?)?;
//! assert_eq!(lyubeznik_top(&i, true)?.lambda, 2);
//! # Ok::<(), lyco::Error>(())
//! ```

pub mod cli;
pub mod connectivity;
pub mod error;
pub mod factor;
pub mod field;
pub mod groebner;
pub mod homological;
pub mod ideal;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod unipoly;

pub use error::{Error, Result};
pub use ideal::Ideal;
pub use poly::Polynomial;
pub use ring::{Ring, RingCtx};

#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/rings.md")]
    pub mod rings {}
    #[doc = include_str!("../../../book/src/groebner.md")]
    pub mod groebner {}
    #[doc = include_str!("../../../book/src/ideals.md")]
    pub mod ideals {}
    #[doc = include_str!("../../../book/src/modules.md")]
    pub mod modules {}
    #[doc = include_str!("../../../book/src/connectivity.md")]
    pub mod connectivity {}
    #[doc = include_str!("../../../book/src/sessions.md")]
    pub mod sessions {}
}
