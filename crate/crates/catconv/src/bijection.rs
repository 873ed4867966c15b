//! The executable bijections, each paired with its inverse.
//!
//! * [`chi`] / [`chi_inv`]: the axis decomposition. The x-axis cuts a
//!   balanced path into maximal excursions; each excursion, stripped of its
//!   first and last step (and reflected up if it ran below the axis),
//!   becomes a signed Dyck path. The sign records the side of the axis.
//!   The weight of the image equals the parameter of the source.
//! * [`psi`] / [`psi_inv`]: the first-return decomposition of an
//!   even-parameter Dyck path into odd-parameter signed items. A nonempty
//!   Dyck path splits uniquely as `U L D R` with `parameter(L) +
//!   parameter(R)` odd; whichever side is odd is emitted (`-` for the left
//!   side, `+` for the right) and the even remainder is processed the same
//!   way until it is empty.
//! * [`even_zeroed_from_dyck`] = `chi_inv . psi`: carries Dyck paths of
//!   parameter `2n` onto even-zeroed balanced `2n`-paths, witnessing that
//!   both families have `C_{2n}` members. A balanced path is even-zeroed
//!   exactly when all items of its axis decomposition have odd parameter,
//!   which is exactly the image law of `psi`.
//! * [`theorem9_forward`] / [`theorem9_backward`]: the splice between
//!   even-parameter pairs whose first component touches the axis at a
//!   position congruent to 2 mod 4 ([`PairE`]) and odd-parameter pairs
//!   ([`PairO`]). Cut the first component at its leftmost such touch,
//!   move the tail across the pair boundary.

use crate::error::Error;
use crate::path::{BalancedPath, DyckPath, Path, Sign, SignedDyckPath, SignedSeq, Step};

/// First-return decomposition `U left D right` of a nonempty Dyck path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DyckSplit {
    pub left: DyckPath,
    pub right: DyckPath,
}

impl DyckSplit {
    /// Reassembles `U left D right`.
    pub fn rebuild(&self) -> DyckPath {
        let mut steps = Vec::with_capacity(self.left.as_path().len() + self.right.as_path().len() + 2);
        steps.push(Step::Up);
        steps.extend_from_slice(self.left.as_path().steps());
        steps.push(Step::Down);
        steps.extend_from_slice(self.right.as_path().steps());
        DyckPath::new_unchecked(Path::from(steps))
    }
}

/// Cuts a balanced path at every x-intercept and lists the excursions as
/// signed Dyck paths (outer steps stripped, below-axis excursions
/// reflected). The empty path maps to the empty sequence.
pub fn chi(b: &BalancedPath) -> SignedSeq {
    let path = b.as_path();
    let intercepts = path.x_intercepts();
    let mut items = Vec::with_capacity(intercepts.len() - 1);
    for window in intercepts.windows(2) {
        let (start, end) = (window[0], window[1]);
        let sign = match path.steps()[start] {
            Step::Up => Sign::Plus,
            Step::Down => Sign::Minus,
        };
        let mut inner = path.slice(start + 1..end - 1);
        if sign == Sign::Minus {
            inner = inner.reflect();
        }
        debug_assert!(inner.is_dyck());
        items.push(SignedDyckPath::new(sign, DyckPath::new_unchecked(inner)));
    }
    debug_assert_eq!(
        items.iter().map(|i| i.parameter() + 1).sum::<usize>(),
        b.parameter()
    );
    SignedSeq::new(items)
}

/// Inverse of [`chi`]: rewraps every item as `U item D` (plus) or
/// `D reflect(item) U` (minus) and concatenates. The parameter of the
/// result equals the weight of the sequence.
pub fn chi_inv(seq: &SignedSeq) -> BalancedPath {
    let mut steps = Vec::with_capacity(2 * seq.weight());
    for item in &seq.items {
        match item.sign {
            Sign::Plus => {
                steps.push(Step::Up);
                steps.extend_from_slice(item.path.as_path().steps());
                steps.push(Step::Down);
            }
            Sign::Minus => {
                steps.push(Step::Down);
                steps.extend_from_slice(item.path.as_path().reflect().steps());
                steps.push(Step::Up);
            }
        }
    }
    BalancedPath::new_unchecked(Path::from(steps))
}

/// The unique decomposition `U left D right` of a nonempty Dyck path,
/// splitting at the first return to the axis.
pub fn dyck_split(d: &DyckPath) -> Result<DyckSplit, Error> {
    let path = d.as_path();
    if path.is_empty() {
        return Err(Error::EmptySplit);
    }
    let first_return = path
        .heights()
        .enumerate()
        .skip(1)
        .find(|&(_, h)| h == 0)
        .map(|(t, _)| t)
        .expect("balanced path returns to the axis");
    let left = path.slice(1..first_return - 1);
    let right = path.slice(first_return..path.len());
    debug_assert!(left.is_dyck() && right.is_dyck());
    Ok(DyckSplit {
        left: DyckPath::new_unchecked(left),
        right: DyckPath::new_unchecked(right),
    })
}

/// Decomposes an even-parameter Dyck path into a sequence of odd-parameter
/// signed Dyck paths via repeated first-return splits: the odd side of each
/// split is emitted (`-` for left, `+` for right) and the even side is
/// split again. Weight of the image equals the parameter of the input.
pub fn psi(d: &DyckPath) -> Result<SignedSeq, Error> {
    if !d.parameter().is_multiple_of(2) {
        return Err(Error::OddParameter {
            path: d.to_string(),
        });
    }
    let mut items = Vec::new();
    let mut current = d.clone();
    while !current.as_path().is_empty() {
        let DyckSplit { left, right } = dyck_split(&current)?;
        // parameter(left) + parameter(right) is odd: exactly one side is odd.
        if left.parameter() % 2 == 1 {
            items.push(SignedDyckPath::new(Sign::Minus, left));
            current = right;
        } else {
            debug_assert_eq!(right.parameter() % 2, 1);
            items.push(SignedDyckPath::new(Sign::Plus, right));
            current = left;
        }
    }
    let seq = SignedSeq::new(items);
    debug_assert_eq!(seq.weight(), d.parameter());
    Ok(seq)
}

/// Inverse of [`psi`]. Processing the items front to back corresponds to
/// rebuilding back to front: with `T` the path rebuilt from the tail so
/// far, a head `-(P)` gives `U P D T` and a head `+(P)` gives `U T D P`.
pub fn psi_inv(seq: &SignedSeq) -> Result<DyckPath, Error> {
    for item in &seq.items {
        if item.parameter() % 2 == 0 {
            return Err(Error::EvenParameter {
                path: item.path.to_string(),
            });
        }
    }
    let mut tail = Path::empty();
    for item in seq.items.iter().rev() {
        let inner = item.path.as_path();
        let mut steps = Vec::with_capacity(inner.len() + tail.len() + 2);
        steps.push(Step::Up);
        match item.sign {
            Sign::Minus => {
                steps.extend_from_slice(inner.steps());
                steps.push(Step::Down);
                steps.extend_from_slice(tail.steps());
            }
            Sign::Plus => {
                steps.extend_from_slice(tail.steps());
                steps.push(Step::Down);
                steps.extend_from_slice(inner.steps());
            }
        }
        tail = Path::from(steps);
    }
    debug_assert!(tail.is_dyck());
    Ok(DyckPath::new_unchecked(tail))
}

/// `chi_inv . psi`: maps a Dyck path of parameter `2n` to an even-zeroed
/// balanced `2n`-path.
pub fn even_zeroed_from_dyck(d: &DyckPath) -> Result<BalancedPath, Error> {
    let image = chi_inv(&psi(d)?);
    debug_assert!(image.is_even_zeroed());
    Ok(image)
}

/// `psi_inv . chi`: the inverse direction. Requires the input to be
/// even-zeroed, which is equivalent to every item of its axis
/// decomposition having odd parameter.
pub fn dyck_from_even_zeroed(b: &BalancedPath) -> Result<DyckPath, Error> {
    if !b.is_even_zeroed() {
        return Err(Error::NotEvenZeroed {
            path: b.to_string(),
        });
    }
    psi_inv(&chi(b))
}

/// Splits a balanced path at its leftmost x-intercept congruent to
/// 2 mod 4. The prefix is balanced with odd parameter and all of its
/// earlier intercepts divisible by 4; the remainder is balanced.
pub fn split_at_first_2mod4_intercept(
    p: &BalancedPath,
) -> Result<(BalancedPath, BalancedPath), Error> {
    let path = p.as_path();
    let cut = path
        .x_intercepts()
        .into_iter()
        .find(|t| t % 4 == 2)
        .ok_or_else(|| Error::NoSplitIntercept {
            path: p.to_string(),
        })?;
    let left = path.slice(0..cut);
    let right = path.slice(cut..path.len());
    debug_assert_eq!(left.len() / 2 % 2, 1);
    Ok((
        BalancedPath::new_unchecked(left),
        BalancedPath::new_unchecked(right),
    ))
}

/// A pair of even-parameter balanced paths whose first component touches
/// the axis at some position congruent to 2 mod 4. The parameter sum is
/// stored so later domain checks are O(1).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairE {
    first: BalancedPath,
    second: BalancedPath,
    parameter_sum: usize,
}

impl PairE {
    pub fn new(first: BalancedPath, second: BalancedPath) -> Result<Self, Error> {
        for half in [&first, &second] {
            if half.parameter() % 2 != 0 {
                return Err(Error::OddParameter {
                    path: half.to_string(),
                });
            }
        }
        if !first.as_path().x_intercepts().iter().any(|t| t % 4 == 2) {
            return Err(Error::NoSplitIntercept {
                path: first.to_string(),
            });
        }
        let parameter_sum = first.parameter() + second.parameter();
        Ok(PairE {
            first,
            second,
            parameter_sum,
        })
    }

    pub fn first(&self) -> &BalancedPath {
        &self.first
    }

    pub fn second(&self) -> &BalancedPath {
        &self.second
    }

    pub fn parameter_sum(&self) -> usize {
        self.parameter_sum
    }
}

/// A pair of odd-parameter balanced paths.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairO {
    first: BalancedPath,
    second: BalancedPath,
    parameter_sum: usize,
}

impl PairO {
    pub fn new(first: BalancedPath, second: BalancedPath) -> Result<Self, Error> {
        for half in [&first, &second] {
            if half.parameter() % 2 != 1 {
                return Err(Error::EvenParameter {
                    path: half.to_string(),
                });
            }
        }
        let parameter_sum = first.parameter() + second.parameter();
        Ok(PairO {
            first,
            second,
            parameter_sum,
        })
    }

    pub fn first(&self) -> &BalancedPath {
        &self.first
    }

    pub fn second(&self) -> &BalancedPath {
        &self.second
    }

    pub fn parameter_sum(&self) -> usize {
        self.parameter_sum
    }
}

/// The splice `(E1, E2) -> (L E2, R)` where `E1 = L R` is cut at the
/// leftmost 2-mod-4 intercept. Preserves the parameter sum.
pub fn theorem9_forward(e: &PairE) -> PairO {
    let (left, right) = split_at_first_2mod4_intercept(e.first())
        .expect("PairE invariant guarantees a qualifying intercept");
    let first = left.concat(e.second());
    debug_assert_eq!(first.parameter() % 2, 1);
    debug_assert_eq!(right.parameter() % 2, 1);
    let parameter_sum = e.parameter_sum();
    debug_assert_eq!(first.parameter() + right.parameter(), parameter_sum);
    PairO {
        first,
        second: right,
        parameter_sum,
    }
}

/// Exact inverse of [`theorem9_forward`]: an odd-parameter first component
/// ends at a position congruent to 2 mod 4, so it always splits as
/// `(L, E2)`; the image is `(L O2, E2)`.
pub fn theorem9_backward(o: &PairO) -> PairE {
    let (left, second) = split_at_first_2mod4_intercept(o.first())
        .expect("odd parameter forces an intercept of the form 4t + 2");
    let first = left.concat(o.second());
    debug_assert_eq!(first.parameter() % 2, 0);
    debug_assert_eq!(second.parameter() % 2, 0);
    debug_assert!(first.as_path().x_intercepts().iter().any(|t| t % 4 == 2));
    let parameter_sum = o.parameter_sum();
    PairE {
        first,
        second,
        parameter_sum,
    }
}
