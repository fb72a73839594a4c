//! The bijection between rational Dyck words and regular Dyck paths whose
//! ascents are colored by factor-free words.
//!
//! Forward direction: repeatedly remove the rightmost factor-free subword
//! of each primitive component; the extracted factors become the ascent
//! colors, read from the last factor back to the first. The number of peaks
//! of the image equals the reducibility level of the word.
//!
//! Inverse direction: re-insert the coloring words left to right at the
//! positions determined by the accumulated descents.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::words::{DyckWord, Slope, WordError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PathError {
    #[error("operation requires a nonempty word")]
    EmptyWord,
    #[error("path has no peaks")]
    EmptyPath,
    #[error("invalid color {color:?}: {reason}")]
    InvalidColor { color: String, reason: String },
    #[error("ascent {ascent} does not match color length {color_len}")]
    AscentColorMismatch { ascent: usize, color_len: usize },
    #[error("ascent {0} is not a positive multiple of the period")]
    BadAscentLength(usize),
    #[error("descent {0} is not positive")]
    BadDescentLength(usize),
    #[error("path dips below the axis")]
    PathDipsBelowAxis,
    #[error("total ascent {ascent} != total descent {descent}")]
    Unbalanced { ascent: usize, descent: usize },
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("bad path JSON: {0}")]
    Json(String),
}

/// One peak: a maximal ascent, its coloring factor-free word, and the run
/// of down-steps that follows it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Peak {
    pub ascent: usize,
    pub color: DyckWord,
    pub descent: usize,
}

/// A regular Dyck path with ascents that are positive multiples of
/// `alpha + beta`, each colored by a factor-free word of the same length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredDyckPath {
    slope: Slope,
    peaks: Vec<Peak>,
}

impl ColoredDyckPath {
    /// Validates all structural invariants: ascent lengths, color lengths
    /// and factor-freeness, balance, and nonnegativity of partial sums.
    pub fn new(slope: Slope, peaks: Vec<Peak>) -> Result<Self, PathError> {
        if peaks.is_empty() {
            return Err(PathError::EmptyPath);
        }
        let period = slope.period() as usize;
        let mut height: i64 = 0;
        let mut total_ascent = 0usize;
        let mut total_descent = 0usize;
        for peak in &peaks {
            if peak.ascent == 0 || peak.ascent % period != 0 {
                return Err(PathError::BadAscentLength(peak.ascent));
            }
            if peak.descent == 0 {
                return Err(PathError::BadDescentLength(peak.descent));
            }
            if peak.color.len() != peak.ascent {
                return Err(PathError::AscentColorMismatch {
                    ascent: peak.ascent,
                    color_len: peak.color.len(),
                });
            }
            if peak.color.slope() != slope || !peak.color.is_factor_free()? {
                return Err(PathError::InvalidColor {
                    color: peak.color.to_string(),
                    reason: "not a factor-free word for this slope".into(),
                });
            }
            total_ascent += peak.ascent;
            total_descent += peak.descent;
            height += peak.ascent as i64;
            height -= peak.descent as i64;
            if height < 0 {
                return Err(PathError::PathDipsBelowAxis);
            }
        }
        if total_ascent != total_descent {
            return Err(PathError::Unbalanced {
                ascent: total_ascent,
                descent: total_descent,
            });
        }
        Ok(ColoredDyckPath { slope, peaks })
    }

    pub fn slope(&self) -> Slope {
        self.slope
    }

    pub fn peaks(&self) -> &[Peak] {
        &self.peaks
    }

    /// Number of maximal ascents.
    pub fn peak_count(&self) -> usize {
        self.peaks.len()
    }

    /// Semilength: total number of up-steps.
    pub fn semilength(&self) -> usize {
        self.peaks.iter().map(|p| p.ascent).sum()
    }

    pub fn to_json(&self) -> String {
        let wire = PathWire {
            slope: self.slope.to_string(),
            peaks: self
                .peaks
                .iter()
                .map(|p| PeakWire {
                    ascent: p.ascent,
                    color: p.color.to_string(),
                    descent: p.descent,
                })
                .collect(),
        };
        serde_json::to_string(&wire).expect("wire struct always serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, PathError> {
        let wire: PathWire =
            serde_json::from_str(text).map_err(|e| PathError::Json(e.to_string()))?;
        let slope = Slope::parse(&wire.slope)?;
        let mut peaks = Vec::with_capacity(wire.peaks.len());
        for p in &wire.peaks {
            let color =
                DyckWord::validate(slope, &p.color).map_err(|e| PathError::InvalidColor {
                    color: p.color.clone(),
                    reason: e.to_string(),
                })?;
            peaks.push(Peak {
                ascent: p.ascent,
                color,
                descent: p.descent,
            });
        }
        ColoredDyckPath::new(slope, peaks)
    }
}

impl fmt::Display for ColoredDyckPath {
    /// Compact rendering: `u^10 d^8 u^5 d^4 u^5 d^8 | aabbabbabb,ababb,aabbb`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.peaks.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "u^{} d^{}", p.ascent, p.descent)?;
        }
        write!(f, " | ")?;
        for (i, p) in self.peaks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p.color)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct PathWire {
    slope: String,
    peaks: Vec<PeakWire>,
}

#[derive(Serialize, Deserialize)]
struct PeakWire {
    ascent: usize,
    color: String,
    descent: usize,
}

/// Maps a nonempty Dyck word to its colored Dyck path. Each primitive
/// component maps separately; the images are concatenated, so touch points
/// of the word become axis returns of the path.
pub fn to_colored(word: &DyckWord) -> Result<ColoredDyckPath, PathError> {
    if word.is_empty() {
        return Err(PathError::EmptyWord);
    }
    let mut peaks = Vec::new();
    for component in word.split_components() {
        let total = component.len();
        // Reduction chain: factors w'_1, ..., w'_k and prefix lengths
        // l_1, ..., l_{k-1}. Factors are peeled rightmost first so the
        // positions strictly decrease and the emitted descents stay
        // positive; this is the order the insertion-based inverse undoes.
        let mut factors = Vec::new();
        let mut prefix_lens = Vec::new();
        let mut current = component;
        loop {
            let step = current.rightmost_factor_free()?;
            if step.word_is_factor_free {
                factors.push(step.factor);
                break;
            }
            prefix_lens.push(step.prefix_len);
            factors.push(step.factor);
            current = step.remainder;
        }
        // Emit u^|w'_k| d^(l_{k-1}) ... u^|w'_1| d^(total - l_1), i.e. for
        // j = k..1 the descent is l_{j-1} - l_j with l_k = 0 and l_0 = total.
        let k = factors.len();
        for j in (1..=k).rev() {
            let l_prev = if j >= 2 { prefix_lens[j - 2] } else { total };
            let l_cur = if j <= prefix_lens.len() {
                prefix_lens[j - 1]
            } else {
                0
            };
            let color = factors[j - 1].clone();
            peaks.push(Peak {
                ascent: color.len(),
                color,
                descent: l_prev - l_cur,
            });
        }
    }
    ColoredDyckPath::new(word.slope(), peaks)
}

/// Inverse map: splits the path at its axis returns and rebuilds each
/// segment by repeated insertion of the coloring words, left to right, at
/// the accumulated descent positions.
pub fn from_colored(path: &ColoredDyckPath) -> Result<DyckWord, PathError> {
    let slope = path.slope();
    let mut result = DyckWord::empty(slope);
    let mut segment: Vec<&Peak> = Vec::new();
    let mut height: i64 = 0;
    for peak in path.peaks() {
        segment.push(peak);
        height += peak.ascent as i64 - peak.descent as i64;
        if height == 0 {
            let word = rebuild_segment(&segment)?;
            result = result.extend(result.len(), &word)?;
            segment.clear();
        }
    }
    debug_assert!(segment.is_empty(), "validated paths end on the axis");
    Ok(result)
}

fn rebuild_segment(peaks: &[&Peak]) -> Result<DyckWord, PathError> {
    let mut word = peaks[0].color.clone();
    let mut position = 0usize;
    for i in 1..peaks.len() {
        position += peaks[i - 1].descent;
        word = word.extend(position, &peaks[i].color)?;
    }
    Ok(word)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn slope32() -> Slope {
        Slope::new(2, 3).unwrap()
    }

    fn word(s: &str) -> DyckWord {
        DyckWord::validate(slope32(), s).unwrap()
    }

    const EXAMPLE_WORD: &str = "aabbabbaababaabbbbbb";

    #[test]
    fn example_word_maps_to_expected_path() {
        let path = to_colored(&word(EXAMPLE_WORD)).unwrap();
        assert_eq!(
            path.to_string(),
            "u^10 d^8 u^5 d^4 u^5 d^8 | aabbabbabb,ababb,aabbb"
        );
        assert_eq!(path.peak_count(), 3);
        assert_eq!(path.semilength(), 20);
    }

    #[test]
    fn factor_free_word_maps_to_single_peak() {
        let path = to_colored(&word("aabbb")).unwrap();
        assert_eq!(path.to_string(), "u^5 d^5 | aabbb");
        assert_eq!(path.peak_count(), 1);
    }

    #[test]
    fn components_map_to_axis_returning_blocks() {
        let path = to_colored(&word("aabbbababb")).unwrap();
        assert_eq!(path.to_string(), "u^5 d^5 u^5 d^5 | aabbb,ababb");
        assert_eq!(path.peak_count(), 2);
    }

    #[test]
    fn inverse_of_expected_path() {
        let path = to_colored(&word(EXAMPLE_WORD)).unwrap();
        assert_eq!(from_colored(&path).unwrap(), word(EXAMPLE_WORD));
    }

    #[test]
    fn inverse_of_single_peak() {
        let path = to_colored(&word("aabbb")).unwrap();
        assert_eq!(from_colored(&path).unwrap().to_string(), "aabbb");
    }

    #[test]
    fn inverse_of_two_component_path() {
        let json = r#"{"slope":"3/2","peaks":[
            {"ascent":5,"color":"aabbb","descent":5},
            {"ascent":5,"color":"ababb","descent":5}]}"#;
        let path = ColoredDyckPath::from_json(json).unwrap();
        assert_eq!(from_colored(&path).unwrap().to_string(), "aabbbababb");
    }

    #[test]
    fn json_roundtrip() {
        let path = to_colored(&word(EXAMPLE_WORD)).unwrap();
        let json = path.to_json();
        assert_eq!(ColoredDyckPath::from_json(&json).unwrap(), path);
    }

    #[test]
    fn peak_count_equals_reducibility_level() {
        for text in [EXAMPLE_WORD, "aabbb", "ababb", "aabbbababb", "aabbbaabbb"] {
            let w = word(text);
            assert_eq!(
                to_colored(&w).unwrap().peak_count(),
                w.reducibility_level(),
                "{text}"
            );
        }
    }

    #[test]
    fn rejects_non_factor_free_color() {
        let json = r#"{"slope":"3/2","peaks":[
            {"ascent":10,"color":"aabbbaabbb","descent":10}]}"#;
        assert!(matches!(
            ColoredDyckPath::from_json(json),
            Err(PathError::InvalidColor { .. })
        ));
    }

    #[test]
    fn rejects_dipping_path() {
        let json = r#"{"slope":"3/2","peaks":[
            {"ascent":5,"color":"aabbb","descent":7},
            {"ascent":5,"color":"ababb","descent":3}]}"#;
        assert_eq!(
            ColoredDyckPath::from_json(json).unwrap_err(),
            PathError::PathDipsBelowAxis
        );
    }

    #[test]
    fn rejects_unbalanced_path() {
        let json = r#"{"slope":"3/2","peaks":[
            {"ascent":5,"color":"aabbb","descent":3}]}"#;
        assert!(matches!(
            ColoredDyckPath::from_json(json),
            Err(PathError::Unbalanced { .. })
        ));
    }

    #[test]
    fn rejects_color_length_mismatch() {
        let json = r#"{"slope":"3/2","peaks":[
            {"ascent":10,"color":"aabbb","descent":10}]}"#;
        assert!(matches!(
            ColoredDyckPath::from_json(json),
            Err(PathError::AscentColorMismatch { .. })
        ));
    }

    #[test]
    fn empty_word_has_no_image() {
        assert_eq!(
            to_colored(&DyckWord::empty(slope32())).unwrap_err(),
            PathError::EmptyWord
        );
    }
}
