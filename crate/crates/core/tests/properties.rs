use propfactor::oracle::{brute_lpcf, brute_runs};
use propfactor::palindromic::collect_arms;
use propfactor::{
    build_suffix_tree, compute_runs, join_texts, load_text, lpcf, matching_statistics,
    maximal_palindromes, LpcfAlgorithm, LpcfQuery, SqmsIndex, SquareArrays, Text,
};
use proptest::prelude::*;

fn text_of(max_len: usize, sigma: u8) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec((0..sigma).prop_map(|c| b'a' + c), 1..=max_len)
}

fn load(raw: &[u8]) -> Text {
    load_text(raw).unwrap()
}

fn occurs(hay: &[u8], needle: &[u8]) -> bool {
    needle.is_empty() || hay.windows(needle.len()).any(|w| w == needle)
}

fn has_square(f: &[u8]) -> bool {
    (0..f.len()).any(|i| (1..=(f.len() - i) / 2).any(|h| f[i..i + h] == f[i + h..i + 2 * h]))
}

fn period(f: &[u8]) -> usize {
    (1..=f.len())
        .find(|&p| (p..f.len()).all(|a| f[a] == f[a - p]))
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn load_is_idempotent(raw in prop::collection::vec(1u8..=255, 0..50)) {
        let t = load(&raw);
        prop_assert_eq!(load(&t.to_bytes().unwrap()), t);
    }

    #[test]
    fn joined_origins_reconstruct_inputs(raws in prop::collection::vec(text_of(20, 4), 1..5)) {
        let texts: Vec<Text> = raws.iter().map(|r| load(r)).collect();
        let joined = join_texts(&texts).unwrap();
        let mut rebuilt = vec![Vec::new(); texts.len()];
        for pos in 0..joined.len() {
            if let Some((string, local)) = joined.origin(pos) {
                prop_assert_eq!(local, rebuilt[string].len());
                rebuilt[string].push(joined.symbols()[pos] - joined.encode(0));
            }
        }
        for (t, r) in texts.iter().zip(&rebuilt) {
            prop_assert_eq!(t.symbols(), r.as_slice());
        }
    }

    #[test]
    fn matching_statistics_are_maximal(x in text_of(40, 3), y in text_of(40, 3)) {
        let tree = build_suffix_tree(&load(&x));
        for (j, e) in matching_statistics(&tree, &load(&y)).iter().enumerate() {
            let m = e.length;
            prop_assert!(x[e.position..].starts_with(&y[j..j + m]));
            if j + m < y.len() {
                prop_assert!(!occurs(&x, &y[j..=j + m]));
            }
        }
    }

    #[test]
    fn runs_agree_with_oracle(x in text_of(80, 3)) {
        let t = load(&x);
        let runs = compute_runs(&t);
        prop_assert!(runs.len() < x.len());
        prop_assert_eq!(runs, brute_runs(t.symbols(), 256).unwrap());
    }

    #[test]
    fn longest_squarefree_is_tight(x in text_of(60, 3)) {
        let a = SquareArrays::new(&load(&x));
        for (i, &l) in a.longest.iter().enumerate() {
            prop_assert!(!has_square(&x[i..i + l]));
            prop_assert!(i + l == x.len() || has_square(&x[i..=i + l]));
        }
    }

    #[test]
    fn sqms_values_are_tight(x in text_of(40, 3), y in text_of(40, 3)) {
        let res = SqmsIndex::build(&load(&x)).unwrap().query(&load(&y));
        for (j, &v) in res.values.iter().enumerate() {
            let f = &y[j..j + v];
            prop_assert!(occurs(&x, f) && !has_square(f));
            if j + v < y.len() {
                let g = &y[j..=j + v];
                prop_assert!(!occurs(&x, g) || has_square(g));
            }
        }
    }

    #[test]
    fn sqms_best_is_symmetric(x in text_of(40, 3), y in text_of(40, 3)) {
        let (tx, ty) = (load(&x), load(&y));
        let xy = SqmsIndex::build(&tx).unwrap().query(&ty).best_length;
        let yx = SqmsIndex::build(&ty).unwrap().query(&tx).best_length;
        prop_assert_eq!(xy, yx);
    }

    #[test]
    fn lpcf_is_monotone_and_routes_agree(raws in prop::collection::vec(text_of(30, 2), 2..5)) {
        let texts: Vec<Text> = raws.iter().map(|r| load(r)).collect();
        let mut last = usize::MAX;
        for k_prime in 2..=texts.len() {
            let q = LpcfQuery::new(texts.clone(), k_prime, LpcfAlgorithm::WeightedAncestor).unwrap();
            let wa = lpcf(&q);
            let nga = lpcf(&q.with_algorithm(LpcfAlgorithm::NearestGoodAncestor));
            prop_assert_eq!(wa.length, nga.length);
            prop_assert!(wa.length <= last);
            last = wa.length;
            if let Some(w) = wa.witness {
                let f = &raws[w.string][w.start..w.start + w.length];
                prop_assert!(2 * period(f) <= f.len());
                prop_assert!(raws.iter().filter(|r| occurs(r, f)).count() >= k_prime);
            }
        }
    }

    #[test]
    fn periodic_factors_lie_in_runs(x in text_of(30, 2), y in text_of(30, 2)) {
        let runs = compute_runs(&load(&x));
        for i in 0..x.len() {
            for j in i + 2..=x.len() {
                let f = &x[i..j];
                let p = period(f);
                if 2 * p > f.len() || !occurs(&y, f) {
                    continue;
                }
                prop_assert!(
                    runs.iter().any(|r| r.period == p && r.start <= i && j - 1 <= r.end),
                    "{:?} at {}", f, i
                );
            }
        }
        let xs = load(&x);
        let ys = load(&y);
        let best = brute_lpcf(&[xs.symbols(), ys.symbols()], 2, 64).unwrap();
        let q = LpcfQuery::new(vec![xs, ys], 2, LpcfAlgorithm::WeightedAncestor).unwrap();
        prop_assert_eq!(lpcf(&q).length, best);
    }

    #[test]
    fn arm_prefixes_mirror_to_palindromes(x in text_of(40, 3)) {
        let t = load(&x);
        for arm in collect_arms(0, &maximal_palindromes(&t)) {
            for m in 1..=arm.len() {
                let (start, len) = arm.mirror(m);
                let f = &x[start..start + len];
                prop_assert!(f.iter().eq(f.iter().rev()));
            }
        }
    }
}
