//! Generalized Dyck words with slope `beta/alpha`.
//!
//! A word over `{a, b}` is a Dyck word when the valuations `h(a) = beta`,
//! `h(b) = -alpha` sum to zero over the whole word and every prefix has a
//! nonnegative valuation sum. All operations here are pure functions over
//! immutable values.

use std::fmt;

use thiserror::Error;

/// Errors raised by word construction and manipulation.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("slope requires coprime positive integers, got {alpha}/{beta}")]
    BadSlope { alpha: u64, beta: u64 },
    #[error("word contains a letter other than 'a' or 'b'")]
    BadAlphabet,
    #[error("total valuation is {0}, expected 0")]
    NonzeroValuation(i64),
    #[error("prefix of length {position} has negative valuation {height}")]
    NegativePrefix { position: usize, height: i64 },
    #[error("operation requires a nonempty word")]
    EmptyWord,
    #[error("word is already factor-free")]
    AlreadyFactorFree,
    #[error("insertion position {position} exceeds word length {len}")]
    PositionOutOfRange { position: usize, len: usize },
}

/// A letter of the two-letter alphabet: `a` steps up by `beta`, `b` steps
/// down by `alpha`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
        }
    }
}

/// The slope parameter: a coprime pair `(alpha, beta)`. The slope written
/// `beta/alpha` gives letter valuations `h(a) = beta` and `h(b) = -alpha`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Slope {
    alpha: u64,
    beta: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Slope {
    pub fn new(alpha: u64, beta: u64) -> Result<Self, WordError> {
        if alpha == 0 || beta == 0 || gcd(alpha, beta) != 1 {
            return Err(WordError::BadSlope { alpha, beta });
        }
        Ok(Slope { alpha, beta })
    }

    pub fn alpha(&self) -> u64 {
        self.alpha
    }

    pub fn beta(&self) -> u64 {
        self.beta
    }

    /// Every Dyck word length is a multiple of this period `alpha + beta`.
    pub fn period(&self) -> u64 {
        self.alpha + self.beta
    }

    pub fn valuation(&self, letter: Letter) -> i64 {
        match letter {
            Letter::A => self.beta as i64,
            Letter::B => -(self.alpha as i64),
        }
    }

    /// Parses `"3/2"` as beta = 3, alpha = 2.
    pub fn parse(text: &str) -> Result<Self, WordError> {
        let bad = || WordError::BadSlope { alpha: 0, beta: 0 };
        let (b, a) = text.split_once('/').ok_or_else(bad)?;
        let beta: u64 = b.trim().parse().map_err(|_| bad())?;
        let alpha: u64 = a.trim().parse().map_err(|_| bad())?;
        Slope::new(alpha, beta)
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.beta, self.alpha)
    }
}

/// A validated Dyck word: zero total valuation and nonnegative prefixes.
/// The empty word is valid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyckWord {
    slope: Slope,
    letters: Vec<Letter>,
}

/// One step of the reduction `w = u w' v -> uv`, where `w'` is the leftmost
/// nonempty factor-free subword of `w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    /// Length of the prefix `u` before the removed factor.
    pub prefix_len: usize,
    /// The removed factor-free subword.
    pub factor: DyckWord,
    /// The word `uv` left after removal.
    pub remainder: DyckWord,
    /// True when the factor is the whole word (no proper factor exists).
    pub word_is_factor_free: bool,
}

impl DyckWord {
    /// Validates a letter sequence against the slope's valuations.
    pub fn validate(slope: Slope, text: &str) -> Result<Self, WordError> {
        let mut letters = Vec::with_capacity(text.len());
        for c in text.chars() {
            match c {
                'a' => letters.push(Letter::A),
                'b' => letters.push(Letter::B),
                _ => return Err(WordError::BadAlphabet),
            }
        }
        Self::from_letters(slope, letters)
    }

    pub fn from_letters(slope: Slope, letters: Vec<Letter>) -> Result<Self, WordError> {
        let mut height: i64 = 0;
        for (i, &l) in letters.iter().enumerate() {
            height += slope.valuation(l);
            if height < 0 && i + 1 < letters.len() {
                return Err(WordError::NegativePrefix {
                    position: i + 1,
                    height,
                });
            }
        }
        if height != 0 {
            return Err(WordError::NonzeroValuation(height));
        }
        // A negative final prefix implies a nonzero valuation, caught above.
        Ok(DyckWord { slope, letters })
    }

    pub fn empty(slope: Slope) -> Self {
        DyckWord {
            slope,
            letters: Vec::new(),
        }
    }

    pub fn slope(&self) -> Slope {
        self.slope
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Valuation sums `h(u)` over every nonempty prefix `u`; the last entry
    /// is always 0. Empty for the empty word.
    pub fn height_profile(&self) -> Vec<i64> {
        let mut heights = Vec::with_capacity(self.letters.len());
        let mut h = 0i64;
        for &l in &self.letters {
            h += self.slope.valuation(l);
            heights.push(h);
        }
        heights
    }

    /// Heights including the leading 0, so `partial[i]` is the valuation of
    /// the length-`i` prefix.
    fn prefix_heights(&self) -> Vec<i64> {
        let mut heights = Vec::with_capacity(self.letters.len() + 1);
        let mut h = 0i64;
        heights.push(0);
        for &l in &self.letters {
            h += self.slope.valuation(l);
            heights.push(h);
        }
        heights
    }

    /// The subword `w[start..start+len]` is a Dyck word (relative to its own
    /// starting height) iff it returns to the start height and never dips
    /// below it.
    fn subword_is_dyck(heights: &[i64], start: usize, len: usize) -> bool {
        let base = heights[start];
        if heights[start + len] != base {
            return false;
        }
        heights[start + 1..start + len].iter().all(|&h| h >= base)
    }

    /// Smallest nonempty Dyck subword starting at `start`, as a length.
    /// This is the first return to the starting height without dipping below.
    fn first_return_len(&self, heights: &[i64], start: usize) -> Option<usize> {
        let period = self.slope.period() as usize;
        let base = heights[start];
        let mut len = period;
        while start + len <= self.letters.len() {
            let window = &heights[start + 1..=start + len];
            if window.iter().any(|&h| h < base) {
                return None;
            }
            if heights[start + len] == base {
                return Some(len);
            }
            len += period;
        }
        None
    }

    /// True iff `w` has no proper factor: no nonempty Dyck subword strictly
    /// shorter than `w` whose removal leaves a Dyck word. Removing a
    /// zero-valuation subword that never dips below its start height always
    /// leaves a Dyck word, so only the subword itself needs checking.
    pub fn is_factor_free(&self) -> Result<bool, WordError> {
        if self.is_empty() {
            return Err(WordError::EmptyWord);
        }
        let heights = self.prefix_heights();
        let n = self.letters.len();
        for start in 0..n {
            if let Some(len) = self.first_return_len(&heights, start) {
                if len < n {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Locates the leftmost nonempty factor-free subword. When the word
    /// itself is factor-free the returned step carries the whole word with
    /// `word_is_factor_free` set.
    ///
    /// At a fixed start position at most one factor-free subword can begin:
    /// any longer Dyck subword at the same start contains the first-return
    /// subword as a proper prefix factor.
    pub fn leftmost_factor_free(&self) -> Result<ReductionStep, WordError> {
        if self.is_empty() {
            return Err(WordError::EmptyWord);
        }
        let heights = self.prefix_heights();
        let n = self.letters.len();
        for start in 0..n {
            let Some(len) = self.first_return_len(&heights, start) else {
                continue;
            };
            debug_assert!(Self::subword_is_dyck(&heights, start, len));
            if len == n {
                // Only possible at start 0: the whole word is its own
                // first return, so no proper subword starts here.
                debug_assert_eq!(start, 0);
                continue;
            }
            let factor = DyckWord {
                slope: self.slope,
                letters: self.letters[start..start + len].to_vec(),
            };
            if factor.is_factor_free()? {
                let mut letters = self.letters[..start].to_vec();
                letters.extend_from_slice(&self.letters[start + len..]);
                let remainder = DyckWord::from_letters(self.slope, letters)
                    .expect("removing a balanced subword keeps the word valid");
                return Ok(ReductionStep {
                    prefix_len: start,
                    factor,
                    remainder,
                    word_is_factor_free: false,
                });
            }
            // The first-return subword at this start is not factor-free, so
            // no factor-free subword starts here; keep scanning.
        }
        // No proper factor anywhere: the word itself is factor-free.
        Ok(ReductionStep {
            prefix_len: 0,
            factor: self.clone(),
            remainder: DyckWord::empty(self.slope),
            word_is_factor_free: true,
        })
    }

    /// Locates the rightmost nonempty factor-free subword, with the same
    /// conventions as [`DyckWord::leftmost_factor_free`]. This is the order
    /// the path bijection needs: peeling factors right to left makes the
    /// removal positions strictly decrease, which the leftmost order does
    /// not guarantee (e.g. "aaaabbbaabbbbbb" at slope 3/2 has leftmost
    /// removal positions 2, 2 but rightmost positions 7, 2).
    pub fn rightmost_factor_free(&self) -> Result<ReductionStep, WordError> {
        if self.is_empty() {
            return Err(WordError::EmptyWord);
        }
        let heights = self.prefix_heights();
        let n = self.letters.len();
        for start in (0..n).rev() {
            let Some(len) = self.first_return_len(&heights, start) else {
                continue;
            };
            if len == n {
                continue;
            }
            let factor = DyckWord {
                slope: self.slope,
                letters: self.letters[start..start + len].to_vec(),
            };
            if factor.is_factor_free()? {
                let mut letters = self.letters[..start].to_vec();
                letters.extend_from_slice(&self.letters[start + len..]);
                let remainder = DyckWord::from_letters(self.slope, letters)
                    .expect("removing a balanced subword keeps the word valid");
                return Ok(ReductionStep {
                    prefix_len: start,
                    factor,
                    remainder,
                    word_is_factor_free: false,
                });
            }
        }
        Ok(ReductionStep {
            prefix_len: 0,
            factor: self.clone(),
            remainder: DyckWord::empty(self.slope),
            word_is_factor_free: true,
        })
    }

    /// Removes the leftmost factor-free subword. Errors when the word is
    /// itself factor-free.
    pub fn reduce_once(&self) -> Result<(ReductionStep, DyckWord), WordError> {
        let step = self.leftmost_factor_free()?;
        if step.word_is_factor_free {
            return Err(WordError::AlreadyFactorFree);
        }
        let remainder = step.remainder.clone();
        Ok((step, remainder))
    }

    /// Inserts `factor` at gap position `j` (0-based, 0..=len), the inverse
    /// of reduction.
    pub fn extend(&self, j: usize, factor: &DyckWord) -> Result<DyckWord, WordError> {
        if j > self.letters.len() {
            return Err(WordError::PositionOutOfRange {
                position: j,
                len: self.letters.len(),
            });
        }
        let mut letters = self.letters[..j].to_vec();
        letters.extend_from_slice(factor.letters());
        letters.extend_from_slice(&self.letters[j..]);
        DyckWord::from_letters(self.slope, letters)
    }

    /// Number of factor-free factors extracted by iterated reduction; the
    /// final factor-free word counts as one. `rl(empty) = 0`.
    pub fn reducibility_level(&self) -> usize {
        let mut word = self.clone();
        let mut level = 0;
        while !word.is_empty() {
            let step = word
                .leftmost_factor_free()
                .expect("nonempty word always has a factor-free subword");
            level += 1;
            if step.word_is_factor_free {
                break;
            }
            word = step.remainder;
        }
        level
    }

    /// Splits at every interior height-zero prefix. Each component touches
    /// height 0 only at its endpoints; concatenating them restores the word.
    pub fn split_components(&self) -> Vec<DyckWord> {
        let heights = self.height_profile();
        let mut components = Vec::new();
        let mut start = 0;
        for (i, &h) in heights.iter().enumerate() {
            if h == 0 {
                let letters = self.letters[start..=i].to_vec();
                components.push(DyckWord {
                    slope: self.slope,
                    letters,
                });
                start = i + 1;
            }
        }
        components
    }
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &l in &self.letters {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}
