use propfactor::oracle::{brute_lpalcf, brute_runs};
use propfactor::{compute_runs, load_text, lpalcf};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_bytes(rng: &mut ChaCha8Rng, max_len: usize) -> Vec<u8> {
    let sigma = rng.gen_range(2..=4);
    let n = rng.gen_range(1..=max_len);
    (0..n).map(|_| b'a' + rng.gen_range(0..sigma)).collect()
}

#[test]
fn runs_match_oracle_on_ten_thousand_strings() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10_000 {
        let raw = random_bytes(&mut rng, 64);
        let t = load_text(&raw).unwrap();
        assert_eq!(
            compute_runs(&t),
            brute_runs(t.symbols(), 256).unwrap(),
            "{raw:?}"
        );
    }
}

#[test]
fn lpalcf_matches_oracle_on_longer_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..300 {
        let x = load_text(&random_bytes(&mut rng, 120)).unwrap();
        let y = load_text(&random_bytes(&mut rng, 120)).unwrap();
        let want = brute_lpalcf(x.symbols(), y.symbols(), 256).unwrap();
        assert_eq!(lpalcf(&x, &y).unwrap().length, want);
    }
}
