//! Cross-module consistency: enumerator cardinalities against the closed
//! forms, the intercept invariants over the full step space, and the
//! first-return decomposition over its full domain and codomain.

use catconv::bijection::{psi, psi_inv};
use catconv::count::{catalan, central_binom, ExactCount};
use catconv::enumerate::{enumerate_balanced, enumerate_dyck, enumerate_even_zeroed};
use catconv::path::{DyckPath, Path, Sign, SignedDyckPath, SignedSeq};

#[test]
fn family_sizes_match_closed_forms() {
    for n in 0..=8usize {
        let balanced = enumerate_balanced(n).unwrap().count();
        assert_eq!(ExactCount::from(balanced), central_binom(n as u64), "B_{n}");
        let dyck = enumerate_dyck(n).unwrap().count();
        assert_eq!(ExactCount::from(dyck), catalan(n as u64), "C_{n}");
    }
    for n in 0..=5usize {
        let even_zeroed = enumerate_even_zeroed(n).unwrap().count();
        assert_eq!(
            ExactCount::from(even_zeroed),
            catalan(2 * n as u64),
            "even-zeroed at {n}"
        );
    }
}

#[test]
fn intercepts_are_even_up_to_length_16() {
    for len in 0..=16usize {
        for code in 0..1u64 << len {
            let path = Path::from_code(len, code);
            assert!(path.x_intercepts().iter().all(|t| t % 2 == 0));
        }
    }
}

#[test]
fn reflection_preserves_even_zeroed_up_to_length_16() {
    for len in 0..=16usize {
        for code in 0..1u64 << len {
            let path = Path::from_code(len, code);
            assert_eq!(path.is_even_zeroed(), path.reflect().is_even_zeroed());
        }
    }
}

#[test]
fn psi_image_law_over_full_parameter_12_domain() {
    // the largest even parameter under the default cap: C_12 = 208012 paths
    let mut seen = 0usize;
    for d in enumerate_dyck(12).unwrap() {
        let image = psi(&d).unwrap();
        assert!(image.items.iter().all(|item| item.parameter() % 2 == 1));
        assert_eq!(image.weight(), 12);
        assert_eq!(psi_inv(&image).unwrap(), d);
        seen += 1;
    }
    assert_eq!(seen, 208_012);
}

/// All sequences of odd-parameter signed Dyck paths of the given weight,
/// built directly from the weight compositions. An independent route into
/// the codomain of the first-return decomposition.
fn odd_item_sequences(weight: usize) -> Vec<SignedSeq> {
    if weight == 0 {
        return vec![SignedSeq::empty()];
    }
    let mut sequences = Vec::new();
    // first item of parameter p (odd) contributes p + 1 to the weight
    for p in (1..weight).step_by(2) {
        let tails = odd_item_sequences(weight - p - 1);
        for path in enumerate_dyck(p).unwrap() {
            for sign in [Sign::Plus, Sign::Minus] {
                for tail in &tails {
                    let mut items = vec![SignedDyckPath::new(sign, path.clone())];
                    items.extend(tail.items.iter().cloned());
                    sequences.push(SignedSeq::new(items));
                }
            }
        }
    }
    sequences
}

#[test]
fn psi_is_onto_the_odd_sequences() {
    for n in 0..=4usize {
        let codomain = odd_item_sequences(2 * n);
        // the codomain is counted by C_{2n}, like its preimage
        assert_eq!(
            ExactCount::from(codomain.len()),
            catalan(2 * n as u64),
            "weight {}",
            2 * n
        );
        for seq in codomain {
            let d: DyckPath = psi_inv(&seq).unwrap();
            assert_eq!(d.parameter(), 2 * n);
            assert_eq!(psi(&d).unwrap(), seq);
        }
    }
}
