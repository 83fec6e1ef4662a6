use std::time::Instant;

use clap::ValueEnum;
use propfactor::repetitions::compute_runs;
use propfactor::{load_text, lpalcf, lpcf, LpcfAlgorithm, LpcfQuery, SqmsIndex, Text};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::{emit, Failure, Format, Outcome};

const DEFAULT_SEED: u64 = 20_240_101;

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Problem {
    Build,
    Sqms,
    LpcfWa,
    LpcfNga,
    Lpalcf,
    Runs,
}

#[derive(Serialize)]
struct Row {
    problem: String,
    input: &'static str,
    size: usize,
    seconds: f64,
    ratio: Option<f64>,
}

fn seed() -> Result<u64, Failure> {
    match std::env::var("PROPFACTOR_SEED") {
        Ok(s) => s
            .parse()
            .map_err(|_| Failure(format!("PROPFACTOR_SEED is not an integer: {s}"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

fn random(rng: &mut ChaCha8Rng, n: usize) -> Text {
    let raw: Vec<u8> = (0..n).map(|_| b'a' + rng.gen_range(0..4)).collect();
    load_text(&raw).unwrap()
}

/// Fibonacci word prefix with rare random substitutions.
fn periodic(rng: &mut ChaCha8Rng, n: usize) -> Text {
    let (mut a, mut b) = (b"a".to_vec(), b"ab".to_vec());
    while b.len() < n {
        let next = [b.as_slice(), a.as_slice()].concat();
        a = std::mem::replace(&mut b, next);
    }
    b.truncate(n);
    for c in b.iter_mut() {
        if rng.gen_ratio(1, 1000) {
            *c = b'c';
        }
    }
    load_text(&b).unwrap()
}

fn time_once(
    problem: Problem,
    gen: &mut dyn FnMut(usize) -> Text,
    n: usize,
) -> Result<f64, Failure> {
    let lpcf_route = |alg, gen: &mut dyn FnMut(usize) -> Text| -> Result<f64, Failure> {
        let texts: Vec<Text> = (0..4).map(|_| gen(n / 4)).collect();
        let q = LpcfQuery::new(texts, 2, alg)?;
        let start = Instant::now();
        lpcf(&q);
        Ok(start.elapsed().as_secs_f64())
    };
    Ok(match problem {
        Problem::Build => {
            let x = gen(n);
            let start = Instant::now();
            SqmsIndex::build(&x)?;
            start.elapsed().as_secs_f64()
        }
        Problem::Sqms => {
            let idx = SqmsIndex::build(&gen(n))?;
            let y = gen(n);
            let start = Instant::now();
            idx.query(&y);
            start.elapsed().as_secs_f64()
        }
        Problem::LpcfWa => lpcf_route(LpcfAlgorithm::WeightedAncestor, gen)?,
        Problem::LpcfNga => lpcf_route(LpcfAlgorithm::NearestGoodAncestor, gen)?,
        Problem::Lpalcf => {
            let (x, y) = (gen(n), gen(n));
            let start = Instant::now();
            lpalcf(&x, &y)?;
            start.elapsed().as_secs_f64()
        }
        Problem::Runs => {
            let x = gen(n);
            let start = Instant::now();
            compute_runs(&x);
            start.elapsed().as_secs_f64()
        }
    })
}

pub fn run(problem: Problem, size: usize, format: Format) -> Outcome {
    if size < 8 {
        return Err(Failure(format!("size must be at least 8, got {size}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed()?);
    let mut rows = Vec::new();
    for input in ["random", "periodic"] {
        let mut prev = None;
        for n in [size, 2 * size] {
            let mut gen = |m: usize| {
                if input == "random" {
                    random(&mut rng, m)
                } else {
                    periodic(&mut rng, m)
                }
            };
            let seconds = time_once(problem, &mut gen, n)?;
            rows.push(Row {
                problem: format!("{problem:?}"),
                input,
                size: n,
                seconds,
                ratio: prev.map(|p: f64| seconds / p.max(1e-9)),
            });
            prev = Some(seconds);
        }
    }
    match format {
        Format::Json => emit(&rows),
        Format::Tsv => {
            println!("problem\tinput\tsize\tseconds\tratio");
            for r in &rows {
                let ratio = r.ratio.map_or(String::from("-"), |x| format!("{x:.3}"));
                println!(
                    "{}\t{}\t{}\t{:.6}\t{ratio}",
                    r.problem, r.input, r.size, r.seconds
                );
            }
            Ok(())
        }
    }
}
