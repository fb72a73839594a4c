//! Exact enumeration of rational Dyck paths.
//!
//! A rational Dyck word with slope `beta/alpha` (for coprime positive
//! `alpha`, `beta`) is a word over `{a, b}` where `a` carries valuation
//! `+beta`, `b` carries `-alpha`, the total valuation is zero, and no prefix
//! valuation is negative. This crate provides:
//!
//! * [`words`] — validation, height profiles, factor-free detection,
//!   reduction and extension, reducibility level, component splitting;
//! * [`bijection`] — the map between rational Dyck words and regular Dyck
//!   paths with factor-free-colored ascents, under which the number of
//!   peaks equals the reducibility level;
//! * [`bell`] — exact rationals, generalized binomials, and partial Bell
//!   polynomials, the computational kernel;
//! * [`series`] — truncated formal power series with exp/log, used for the
//!   coefficient-extraction and generating-function checks;
//! * [`sequences`] — the counting sequences `f`, `phi`, `theta`, `psi`,
//!   the reducibility-level table `r_{n,k}`, and their inverse relations;
//! * [`oracle`] — brute-force enumeration and definition-level counting;
//! * [`verify`] — the cross-check suite tying all of the above together.
//!
//! ```
//! use rational_dyck::words::{DyckWord, Slope};
//!
//! let slope = Slope::parse("3/2").unwrap();
//! let word = DyckWord::validate(slope, "aabbabbaababaabbbbbb").unwrap();
//! assert_eq!(word.reducibility_level(), 3);
//! ```

pub mod bell;
pub mod bijection;
pub mod oracle;
pub mod sequences;
pub mod series;
pub mod verify;
pub mod words;

/// Doctests for the guide in `book/`; each chapter's code blocks compile
/// and run against this crate.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            mod $name {}
        };
    }

    chapter!(introduction, "../../../book/src/introduction.md");
    chapter!(words, "../../../book/src/words.md");
    chapter!(bijection, "../../../book/src/bijection.md");
    chapter!(bell_polynomials, "../../../book/src/bell-polynomials.md");
    chapter!(sequences, "../../../book/src/sequences.md");
    chapter!(series, "../../../book/src/series.md");
    chapter!(oracle, "../../../book/src/oracle.md");
    chapter!(cli, "../../../book/src/cli.md");
}
