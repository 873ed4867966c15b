//! Property tests for the path algebra and the bijections.

use proptest::prelude::*;

use catconv::bijection::{
    chi, chi_inv, psi, psi_inv, theorem9_backward, theorem9_forward, PairE, PairO,
};
use catconv::path::{BalancedPath, DyckPath, Path, Sign, SignedDyckPath, SignedSeq, Step};

fn steps(max_len: usize) -> impl Strategy<Value = Vec<Step>> {
    prop::collection::vec(
        prop_oneof![Just(Step::Up), Just(Step::Down)],
        0..=max_len,
    )
}

fn balanced(max_param: usize) -> impl Strategy<Value = BalancedPath> {
    (0..=max_param)
        .prop_flat_map(|n| {
            let mut base = vec![Step::Up; n];
            base.extend(vec![Step::Down; n]);
            Just(base).prop_shuffle()
        })
        .prop_map(|steps| BalancedPath::new(Path::from(steps)).expect("balanced by construction"))
}

/// Uniform Dyck path of parameter `n` through the cycle lemma: place `n`
/// down-steps among `2n + 1` slots (the rest are up-steps), rotate to the
/// unique dominating rotation and drop its leading up-step.
fn dyck_from_down_positions(n: usize, downs: Vec<usize>) -> DyckPath {
    let total = 2 * n + 1;
    let mut steps = vec![Step::Up; total];
    for position in downs {
        steps[position] = Step::Down;
    }
    let mut prefix = 0i64;
    let mut best = (i64::MAX, 0usize);
    for (index, step) in steps.iter().enumerate() {
        prefix += step.delta();
        // rotate to just past the LAST minimum of the prefix sums
        if prefix <= best.0 {
            best = (prefix, index + 1);
        }
    }
    let start = best.1 % total;
    let rotated: Vec<Step> = steps[start..].iter().chain(&steps[..start]).copied().collect();
    assert_eq!(rotated[0], Step::Up);
    DyckPath::new(Path::from(rotated[1..].to_vec())).expect("cycle lemma yields a Dyck path")
}

fn dyck(max_param: usize) -> impl Strategy<Value = DyckPath> {
    (0..=max_param).prop_flat_map(|n| {
        prop::sample::subsequence((0..2 * n + 1).collect::<Vec<usize>>(), n)
            .prop_map(move |downs| dyck_from_down_positions(n, downs))
    })
}

fn even_dyck(max_half: usize) -> impl Strategy<Value = DyckPath> {
    (0..=max_half).prop_flat_map(|half| {
        let n = 2 * half;
        prop::sample::subsequence((0..2 * n + 1).collect::<Vec<usize>>(), n)
            .prop_map(move |downs| dyck_from_down_positions(n, downs))
    })
}

fn signed_seq(max_items: usize) -> impl Strategy<Value = SignedSeq> {
    prop::collection::vec(
        (prop_oneof![Just(Sign::Plus), Just(Sign::Minus)], dyck(4)),
        0..=max_items,
    )
    .prop_map(|items| {
        SignedSeq::new(
            items
                .into_iter()
                .map(|(sign, path)| SignedDyckPath::new(sign, path))
                .collect(),
        )
    })
}

proptest! {
    #[test]
    fn canonical_form_round_trips(steps in steps(20)) {
        let path = Path::from(steps);
        let text = path.to_string();
        prop_assert_eq!(Path::parse(&text).unwrap(), path);
    }

    #[test]
    fn reflection_is_an_involution(steps in steps(20)) {
        let path = Path::from(steps);
        let reflected = path.reflect();
        prop_assert_eq!(reflected.reflect(), path.clone());
        prop_assert_eq!(reflected.x_intercepts(), path.x_intercepts());
        prop_assert_eq!(reflected.is_even_zeroed(), path.is_even_zeroed());
    }

    #[test]
    fn concat_is_additive(a in steps(12), b in steps(12)) {
        let (a, b) = (Path::from(a), Path::from(b));
        let joined = a.concat(&b);
        prop_assert_eq!(joined.len(), a.len() + b.len());
        prop_assert_eq!(joined.final_height(), a.final_height() + b.final_height());
    }

    #[test]
    fn chi_round_trips(b in balanced(9)) {
        let image = chi(&b);
        prop_assert_eq!(image.weight(), b.parameter());
        prop_assert_eq!(chi_inv(&image), b);
    }

    #[test]
    fn chi_inv_respects_weight(seq in signed_seq(4)) {
        let b = chi_inv(&seq);
        prop_assert_eq!(b.parameter(), seq.weight());
        prop_assert_eq!(chi(&b), seq);
    }

    #[test]
    fn psi_round_trips_with_odd_items(d in even_dyck(5)) {
        let image = psi(&d).unwrap();
        prop_assert!(image.items.iter().all(|item| item.parameter() % 2 == 1));
        prop_assert_eq!(image.weight(), d.parameter());
        prop_assert_eq!(psi_inv(&image).unwrap(), d);
    }

    #[test]
    fn composite_lands_in_even_zeroed(d in even_dyck(5)) {
        let image = catconv::bijection::even_zeroed_from_dyck(&d).unwrap();
        prop_assert!(image.is_even_zeroed());
        prop_assert_eq!(image.parameter(), d.parameter());
        prop_assert_eq!(catconv::bijection::dyck_from_even_zeroed(&image).unwrap(), d);
    }

    #[test]
    fn theorem9_round_trips(
        first in balanced(4).prop_filter(
            "needs a 2-mod-4 intercept",
            |b| b.parameter() % 2 == 0
                && b.as_path().x_intercepts().iter().any(|t| t % 4 == 2),
        ),
        second in balanced(4).prop_filter("even parameter", |b| b.parameter() % 2 == 0),
    ) {
        let pair = PairE::new(first, second).unwrap();
        let image = theorem9_forward(&pair);
        prop_assert_eq!(image.parameter_sum(), pair.parameter_sum());
        prop_assert_eq!(theorem9_backward(&image), pair);
    }

    #[test]
    fn theorem9_backward_round_trips(
        first in balanced(4).prop_filter("odd parameter", |b| b.parameter() % 2 == 1),
        second in balanced(4).prop_filter("odd parameter", |b| b.parameter() % 2 == 1),
    ) {
        let pair = PairO::new(first, second).unwrap();
        let back = theorem9_backward(&pair);
        prop_assert_eq!(theorem9_forward(&back), pair);
    }

    #[test]
    fn signed_seq_text_round_trips(seq in signed_seq(5)) {
        let text = seq.to_string();
        prop_assert_eq!(text.parse::<SignedSeq>().unwrap(), seq);
    }

    #[test]
    fn dyck_strategy_is_sound(d in dyck(8)) {
        prop_assert!(d.as_path().is_dyck());
    }
}
