//! Lattice-path types: steps, paths, balanced/Dyck refinements, signed
//! Dyck paths and signed sequences.
//!
//! A path is a finite sequence of unit up/down steps starting at the origin.
//! Its canonical text form is a string over the alphabet `{U, D}`; that
//! string is the only interchange format at this layer. `height(t)` is the
//! running sum of step deltas over the first `t` steps, and an *x-intercept*
//! is any position `t` (including 0) with `height(t) = 0`. A path is
//! *even-zeroed* when all of its x-intercepts are divisible by 4.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// One unit step of a path. `Up` sorts before `Down`, which makes the
/// derived path ordering lexicographic with `U < D`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    /// Height change contributed by the step.
    pub fn delta(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
        }
    }

    /// The canonical character, `U` or `D`.
    pub fn to_char(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
        }
    }

    /// The reflected step (up becomes down and vice versa).
    pub fn reflect(self) -> Step {
        match self {
            Step::Up => Step::Down,
            Step::Down => Step::Up,
        }
    }
}

/// A finite sequence of up/down steps.
///
/// The derived `Ord` compares step sequences lexicographically with
/// `U < D`; equal-length paths therefore sort exactly like their canonical
/// UD-strings.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Path {
    steps: Vec<Step>,
}

impl Path {
    /// The empty path.
    pub fn empty() -> Self {
        Path { steps: Vec::new() }
    }

    /// Parses a canonical UD-string. Rejects any character outside `{U, D}`
    /// and reports its position.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut steps = Vec::with_capacity(text.len());
        for (position, c) in text.chars().enumerate() {
            match c {
                'U' => steps.push(Step::Up),
                'D' => steps.push(Step::Down),
                found => return Err(Error::InvalidChar { position, found }),
            }
        }
        Ok(Path { steps })
    }

    /// Builds the path encoded by the low `len` bits of `code`, most
    /// significant bit first, with 0 = up and 1 = down. Ascending codes
    /// enumerate all paths of length `len` in lexicographic order.
    pub fn from_code(len: usize, code: u64) -> Self {
        debug_assert!(len < 64);
        debug_assert!(len == 63 || code < (1u64 << len));
        let steps = (0..len)
            .map(|i| {
                if code >> (len - 1 - i) & 1 == 0 {
                    Step::Up
                } else {
                    Step::Down
                }
            })
            .collect();
        Path { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Heights `height(0), ..., height(len)` — one more entry than steps.
    pub fn heights(&self) -> impl Iterator<Item = i64> + '_ {
        std::iter::once(0).chain(self.steps.iter().scan(0i64, |h, s| {
            *h += s.delta();
            Some(*h)
        }))
    }

    /// Height after all steps.
    pub fn final_height(&self) -> i64 {
        self.steps.iter().map(|s| s.delta()).sum()
    }

    /// Minimum of `height(t)` over `0 <= t <= len`.
    pub fn min_height(&self) -> i64 {
        self.heights().min().unwrap_or(0)
    }

    /// Every position `t` with `height(t) = 0`, in ascending order.
    /// Position 0 is always included.
    pub fn x_intercepts(&self) -> Vec<usize> {
        self.heights()
            .enumerate()
            .filter(|&(_, h)| h == 0)
            .map(|(t, _)| t)
            .collect()
    }

    /// True iff every x-intercept is divisible by 4. The intercept at
    /// position 0 always qualifies.
    pub fn is_even_zeroed(&self) -> bool {
        let mut h = 0i64;
        self.steps.iter().enumerate().all(|(i, s)| {
            h += s.delta();
            h != 0 || (i + 1) % 4 == 0
        })
    }

    /// True iff the path has as many up- as down-steps.
    pub fn is_balanced(&self) -> bool {
        self.final_height() == 0
    }

    /// True iff the path is balanced and never falls below the x-axis.
    pub fn is_dyck(&self) -> bool {
        self.is_balanced() && self.min_height() >= 0
    }

    /// The reflection across the x-axis: every step swapped, all heights
    /// negated. An involution.
    pub fn reflect(&self) -> Path {
        Path {
            steps: self.steps.iter().map(|s| s.reflect()).collect(),
        }
    }

    /// Steps of `self` followed by steps of `other`.
    pub fn concat(&self, other: &Path) -> Path {
        let mut steps = Vec::with_capacity(self.len() + other.len());
        steps.extend_from_slice(&self.steps);
        steps.extend_from_slice(&other.steps);
        Path { steps }
    }

    /// The sub-path spanning step positions `range.start..range.end`.
    pub fn slice(&self, range: std::ops::Range<usize>) -> Path {
        Path {
            steps: self.steps[range].to_vec(),
        }
    }
}

impl From<Vec<Step>> for Path {
    fn from(steps: Vec<Step>) -> Self {
        Path { steps }
    }
}

impl FromIterator<Step> for Path {
    fn from_iter<I: IntoIterator<Item = Step>>(iter: I) -> Self {
        Path {
            steps: iter.into_iter().collect(),
        }
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for Path {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Path::parse(s)
    }
}

/// A path with equally many up- and down-steps.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BalancedPath(Path);

impl BalancedPath {
    pub fn new(path: Path) -> Result<Self, Error> {
        if path.is_balanced() {
            Ok(BalancedPath(path))
        } else {
            Err(Error::NotBalanced {
                path: path.to_string(),
            })
        }
    }

    pub(crate) fn new_unchecked(path: Path) -> Self {
        debug_assert!(path.is_balanced());
        BalancedPath(path)
    }

    pub fn empty() -> Self {
        BalancedPath(Path::empty())
    }

    pub fn parse(text: &str) -> Result<Self, Error> {
        BalancedPath::new(Path::parse(text)?)
    }

    /// Number of up-steps; half the length.
    pub fn parameter(&self) -> usize {
        self.0.len() / 2
    }

    pub fn as_path(&self) -> &Path {
        &self.0
    }

    pub fn into_path(self) -> Path {
        self.0
    }

    pub fn is_even_zeroed(&self) -> bool {
        self.0.is_even_zeroed()
    }

    /// Concatenation of balanced paths is balanced, with additive parameter.
    pub fn concat(&self, other: &BalancedPath) -> BalancedPath {
        BalancedPath(self.0.concat(&other.0))
    }
}

impl fmt::Display for BalancedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_path())
    }
}

/// A balanced path that never falls below the x-axis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckPath(BalancedPath);

impl DyckPath {
    pub fn new(path: Path) -> Result<Self, Error> {
        if !path.is_balanced() {
            return Err(Error::NotBalanced {
                path: path.to_string(),
            });
        }
        if path.min_height() < 0 {
            return Err(Error::NotDyck {
                path: path.to_string(),
            });
        }
        Ok(DyckPath(BalancedPath(path)))
    }

    pub(crate) fn new_unchecked(path: Path) -> Self {
        debug_assert!(path.is_dyck());
        DyckPath(BalancedPath(path))
    }

    pub fn empty() -> Self {
        DyckPath(BalancedPath::empty())
    }

    pub fn parse(text: &str) -> Result<Self, Error> {
        DyckPath::new(Path::parse(text)?)
    }

    pub fn parameter(&self) -> usize {
        self.0.parameter()
    }

    pub fn as_path(&self) -> &Path {
        self.0.as_path()
    }

    pub fn as_balanced(&self) -> &BalancedPath {
        &self.0
    }

    pub fn into_balanced(self) -> BalancedPath {
        self.0
    }
}

impl From<DyckPath> for BalancedPath {
    fn from(d: DyckPath) -> Self {
        d.0
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_path())
    }
}

/// Sign tag of a signed Dyck path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn to_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// A Dyck path tagged with a sign.
///
/// The meaning of the sign is map-local: the axis decomposition uses it for
/// above/below-axis excursions, the first-return decomposition for
/// left/right placement.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedDyckPath {
    pub sign: Sign,
    pub path: DyckPath,
}

impl SignedDyckPath {
    pub fn new(sign: Sign, path: DyckPath) -> Self {
        SignedDyckPath { sign, path }
    }

    /// Parameter of the underlying path; the sign is ignored.
    pub fn parameter(&self) -> usize {
        self.path.parameter()
    }
}

impl fmt::Display for SignedDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.sign.to_char(), self.path)
    }
}

impl FromStr for SignedDyckPath {
    type Err = Error;

    /// Parses one token of the canonical sequence form: `+(UDUD)`, `-()`, ...
    fn from_str(token: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidSeqToken {
            token: token.to_string(),
        };
        let rest = token
            .strip_prefix('+')
            .map(|r| (Sign::Plus, r))
            .or_else(|| token.strip_prefix('-').map(|r| (Sign::Minus, r)));
        let (sign, rest) = rest.ok_or_else(bad)?;
        let inner = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let path = DyckPath::parse(inner)?;
        Ok(SignedDyckPath { sign, path })
    }
}

/// An ordered sequence of signed Dyck paths.
///
/// Canonical text form: items joined by single spaces, each item rendered
/// as `+(<UD-string>)` or `-(<UD-string>)`; the empty path shows as `+()`
/// or `-()`, and the empty sequence as the empty string.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SignedSeq {
    pub items: Vec<SignedDyckPath>,
}

impl SignedSeq {
    pub fn new(items: Vec<SignedDyckPath>) -> Self {
        SignedSeq { items }
    }

    pub fn empty() -> Self {
        SignedSeq { items: Vec::new() }
    }

    /// The weight law `sum_i (parameter(item_i) + 1)`. Each item contributes
    /// at least 1, so the weight is never below the item count.
    pub fn weight(&self) -> usize {
        self.items.iter().map(|i| i.parameter() + 1).sum()
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }
}

impl fmt::Display for SignedSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, item) in self.items.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{item}")?;
        }
        Ok(())
    }
}

impl FromStr for SignedSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let items = s
            .split_whitespace()
            .map(SignedDyckPath::from_str)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SignedSeq { items })
    }
}
