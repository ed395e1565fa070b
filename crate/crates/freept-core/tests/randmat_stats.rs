//! Statistical validation of the ensembles against their free limits,
//! at sizes chosen to keep the suite quick; the full-size runs live in
//! the acceptance suite of the companion crate.

use freept_core::freecalc::{
    cumulants_to_moments, free_add_convolve, free_poisson_cumulants, pt_cumulants,
    CumulantSequence, PTContext,
};
use freept_core::randmat::{
    derive_seed, eigvalsh, empirical_moments, partial_transpose, project_compress, sample,
    EnsembleSpec,
};

const SEED: u64 = 0x00C0FFEE;

struct Stats {
    mean: Vec<f64>,
    se: Vec<f64>,
}

fn trial_moments(specs: impl Iterator<Item = EnsembleSpec>, order: usize, pt: bool) -> Stats {
    let samples: Vec<Vec<f64>> = specs
        .map(|spec| {
            let mut x = sample(&spec).unwrap().matrix;
            if pt {
                x = partial_transpose(&x);
            }
            let s = eigvalsh(&x).unwrap();
            empirical_moments(&s, order).unwrap().into_values()
        })
        .collect();
    let trials = samples.len() as f64;
    let mut mean = vec![0.0; order];
    let mut var = vec![0.0; order];
    for row in &samples {
        for (p, v) in row.iter().enumerate() {
            mean[p] += v;
        }
    }
    for m in mean.iter_mut() {
        *m /= trials;
    }
    for row in &samples {
        for (p, v) in row.iter().enumerate() {
            var[p] += (v - mean[p]) * (v - mean[p]);
        }
    }
    let se = var
        .iter()
        .map(|v| (v / (trials - 1.0)).sqrt() / trials.sqrt())
        .collect();
    Stats { mean, se }
}

fn assert_within_3se(stats: &Stats, predicted: &[f64], label: &str) {
    for p in 0..predicted.len() {
        let dev = (stats.mean[p] - predicted[p]).abs();
        let gate = 3.0 * stats.se[p].max(1e-12);
        assert!(
            dev <= gate,
            "{label}: m_{} = {} vs {} (3SE = {})",
            p + 1,
            stats.mean[p],
            predicted[p],
            gate
        );
    }
}

#[test]
fn gue_matches_semicircle_moments() {
    let trials = 10;
    let stats = trial_moments(
        (0..trials).map(|t| EnsembleSpec::gue(2, 400, derive_seed(SEED, t))),
        4,
        false,
    );
    assert_within_3se(&stats, &[0.0, 1.0, 0.0, 2.0], "GUE");
}

#[test]
fn wishart_matches_free_poisson_moments() {
    let k = free_poisson_cumulants(1.0, 1.0, 4).unwrap();
    let predicted = cumulants_to_moments(&k);
    let trials = 10;
    let stats = trial_moments(
        (0..trials).map(|t| EnsembleSpec::wishart(2, 400, 1.0, derive_seed(SEED + 1, t))),
        4,
        false,
    );
    assert_within_3se(&stats, predicted.values(), "Wishart(1)");
    assert!((stats.mean[0] - 1.0).abs() < 0.05, "MP mean is λ");
}

#[test]
fn shifted_wishart_pt_statistics() {
    // X^Γ for X = I + αW matches δ_1 ⊞ pt(freePoisson(λ, α), n)
    let (rate, jump, n, big_n, trials) = (4.0, -1.0 / 8.7, 2usize, 250usize, 12u64);
    let base = free_poisson_cumulants(rate, jump, 4).unwrap();
    let ctx = PTContext::new(n as u32).unwrap();
    let mut shift = vec![0.0; 4];
    shift[0] = 1.0;
    let shift = CumulantSequence::new(shift).unwrap();
    let predicted = cumulants_to_moments(&free_add_convolve(&shift, &pt_cumulants(&base, ctx)).unwrap());
    let stats = trial_moments(
        (0..trials).map(|t| {
            EnsembleSpec::shifted_wishart(n, big_n, rate, jump, 1.0, derive_seed(SEED + 2, t))
        }),
        4,
        true,
    );
    assert_within_3se(&stats, predicted.values(), "shifted Wishart PT");
}

#[test]
fn pt_preserves_first_moment_exactly() {
    let spec = EnsembleSpec::shifted_wishart(3, 40, 4.0, -0.1, 1.0, 9);
    let x = sample(&spec).unwrap().matrix;
    let gamma = partial_transpose(&x);
    assert_eq!(x.trace(), gamma.trace());
    let (sx, sg) = (eigvalsh(&x).unwrap(), eigvalsh(&gamma).unwrap());
    let mx = empirical_moments(&sx, 1).unwrap();
    let mg = empirical_moments(&sg, 1).unwrap();
    assert!((mx.get(1) - mg.get(1)).abs() < 1e-12);
}

#[test]
fn compression_respects_support_bound() {
    // λ_min of a rank-k compression stays above (k/n)·x1(n/k) − slack
    let (rate, jump, n, k, big_n) = (4.0, -1.0 / 8.7, 4usize, 2usize, 80usize);
    let x1 = freept_core::certify::k_bound_f(n, k, rate, jump).unwrap();
    let floor = (k as f64 / n as f64) * x1 - 0.1;
    for t in 0..3u64 {
        let spec = EnsembleSpec::shifted_wishart(n, big_n, rate, jump, 1.0, derive_seed(SEED + 3, t));
        let x = sample(&spec).unwrap().matrix;
        let s = project_compress(&x, k, derive_seed(SEED + 4, t)).unwrap();
        assert!(
            s.min() >= floor,
            "trial {t}: compressed λ_min = {} < floor {floor}",
            s.min()
        );
    }
}

#[test]
fn spectra_are_reproducible() {
    let spec = EnsembleSpec::shifted_wishart(2, 60, 4.0, -1.0 / 8.7, 1.0, 31);
    let a = eigvalsh(&sample(&spec).unwrap().matrix).unwrap();
    let b = eigvalsh(&sample(&spec).unwrap().matrix).unwrap();
    assert_eq!(a.eigenvalues(), b.eigenvalues());
}
