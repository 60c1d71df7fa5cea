use ordered_paths::contain::contains_mono_path;
use ordered_paths::deletion::{DeletionRun, Host};
use ordered_paths::ramsey::{find_mono, ramsey_upper_bound, HalvesConfig, Mode, RamseyConfig};
use ordered_paths::{Color, OrderedColoring, PathFamily, PathSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_coloring(rng: &mut ChaCha8Rng, n: usize, p_red: f64) -> OrderedColoring {
    OrderedColoring::from_fn(n, |_, _| if rng.random_bool(p_red) { Color::Red } else { Color::Blue })
}

#[test]
fn certificates_validate_on_random_hosts() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for family in [PathFamily::Ap, PathFamily::Pgl, PathFamily::Pll, PathFamily::Pgg] {
        for n in 2..=12 {
            let Ok(spec) = PathSpec::new(family, n) else { continue };
            let bound = ramsey_upper_bound(&spec).unwrap();
            for trial in 0..40 {
                let p = [0.5, 0.1, 0.9, 0.3][trial % 4];
                let c = random_coloring(&mut rng, bound + trial % 3, p);
                let found = find_mono(&c, &spec, Mode::Strict)
                    .unwrap_or_else(|e| panic!("{spec} trial {trial}: {e}"))
                    .expect("strict mode always finds a copy");
                found.certificate.validate_in_coloring(&c).unwrap();
                assert_eq!(found.certificate.spec, spec);
            }
        }
    }
}

#[test]
fn coverage_holds_after_every_step() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 3..=10 {
        let cfg = RamseyConfig::tight(n).unwrap();
        let scheme = cfg.scheme().unwrap();
        for _ in 0..20 {
            let c = random_coloring(&mut rng, cfg.n_vertices, 0.5);
            let mut run = DeletionRun::new(&scheme, Host::Coloring(&c)).unwrap();
            while run.step().is_some() {
                assert_eq!(run.coverage_violation(), None, "n={n} step {}", run.steps_run());
            }
            assert!(!run.survivors().is_empty());
        }
    }
    for family in [PathFamily::Pll, PathFamily::Pgg] {
        for n in [4, 6, 8] {
            let spec = PathSpec::new(family, n).unwrap();
            let cfg = HalvesConfig::new(spec, (3 * n - 4) / 2).unwrap();
            let scheme = cfg.scheme();
            for _ in 0..20 {
                let c = random_coloring(&mut rng, cfg.n_vertices(), 0.5);
                let mut run = DeletionRun::new(&scheme, Host::Coloring(&c)).unwrap();
                while run.step().is_some() {
                    assert_eq!(run.coverage_violation(), None, "{spec}");
                }
            }
        }
    }
}

#[test]
fn best_effort_below_the_bound_is_sound() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for family in [PathFamily::Ap, PathFamily::Pgl, PathFamily::Pll, PathFamily::Pgg] {
        for n in 2..=9 {
            let Ok(spec) = PathSpec::new(family, n) else { continue };
            let bound = ramsey_upper_bound(&spec).unwrap();
            for nv in n..bound {
                for _ in 0..15 {
                    let c = random_coloring(&mut rng, nv, 0.5);
                    match find_mono(&c, &spec, Mode::BestEffort) {
                        Ok(Some(found)) => found.certificate.validate_in_coloring(&c).unwrap(),
                        Ok(None) => {}
                        Err(e) => panic!("{spec} N={nv}: {e}"),
                    }
                }
            }
        }
    }
}

#[test]
fn agrees_with_direct_containment() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let spec = PathSpec::ap(6).unwrap();
    for _ in 0..50 {
        let c = random_coloring(&mut rng, 12, 0.5);
        let found = find_mono(&c, &spec, Mode::Strict).unwrap().unwrap();
        let color = found.certificate.color.unwrap();
        assert!(contains_mono_path(&c, &spec, color).is_some());
    }
}
