//! The verification corpus: fixed fixtures followed by seeded random
//! instances.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::modcore::{fixtures, enumerate_submodules, Matrix, ModulePresentation, Submodule};

/// A module, optionally with a fixed base submodule. Without one, suites
/// range over every proper submodule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub module: ModulePresentation,
    pub base: Option<Submodule>,
}

impl Instance {
    pub fn new(module: ModulePresentation) -> Self {
        Self { module, base: None }
    }

    pub fn with_base(module: ModulePresentation, base: Submodule) -> Self {
        Self {
            module,
            base: Some(base),
        }
    }

    pub fn label(&self) -> &str {
        self.module.label()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusLimits {
    pub primes: Vec<u32>,
    pub max_dim: usize,
    pub max_generators: usize,
    /// Instances whose lattice exceeds this many submodules are skipped.
    pub lattice_cap: usize,
    /// Number of random instances to add after the fixtures.
    pub random: usize,
}

impl Default for CorpusLimits {
    fn default() -> Self {
        Self {
            primes: vec![2, 3],
            max_dim: 4,
            max_generators: 2,
            lattice_cap: 64,
            random: 12,
        }
    }
}

/// Fixtures B, C, D; the regular modules of `F_p[x]/(f)` for a few `f`;
/// the upper-triangular `2 x 2` instances; a few direct sums and
/// generator-free modules with larger lattices.
pub fn fixed_instances() -> Vec<ModulePresentation> {
    let mut out = vec![fixtures::local(), fixtures::split(), fixtures::mixed()];
    for f in [&[0u8, 0, 1][..], &[0, 1, 1], &[1, 1, 1], &[0, 1, 0, 1]] {
        out.push(fixtures::companion(2, f));
    }
    for f in [&[1u8, 0, 1][..], &[2, 0, 1], &[0, 0, 0, 1]] {
        out.push(fixtures::companion(3, f));
    }
    out.push(fixtures::upper_triangular_natural(2));
    out.push(fixtures::upper_triangular_natural(3));
    out.push(fixtures::upper_triangular_regular(2));
    out.push(fixtures::glued_tops());
    out.push(fixtures::direct_sum(&fixtures::local(), &fixtures::local()));
    out.push(fixtures::direct_sum(&fixtures::companion(2, &[0, 0, 0, 1]), &fixtures::trivial(2, 1)));
    out.push(fixtures::trivial(2, 3));
    out.push(fixtures::trivial(3, 2));
    out
}

#[derive(Clone, Copy)]
enum Style {
    Dense,
    Nilpotent,
    SparseUpper,
}

fn random_matrix(rng: &mut ChaCha8Rng, p: u32, m: usize, style: Style) -> Matrix {
    let mut a = Matrix::zeros(p, m, m);
    for r in 0..m {
        for c in 0..m {
            let x = match style {
                Style::Dense => rng.gen_range(0..p),
                Style::Nilpotent if c > r => rng.gen_range(0..p),
                Style::SparseUpper if c >= r && rng.gen_bool(0.4) => rng.gen_range(0..p),
                _ => 0,
            };
            a.set(r, c, x as u8);
        }
    }
    a
}

fn lattice_size(m: &ModulePresentation, cap: usize) -> Option<usize> {
    enumerate_submodules(m, 1 << 16).ok().map(|l| l.len()).filter(|&n| n <= cap)
}

/// Deterministic corpus: the fixed instances that fit `limits`, then up to
/// `limits.random` distinct random instances.
pub fn generate_corpus(seed: u64, limits: &CorpusLimits) -> Vec<Instance> {
    let fits = |m: &ModulePresentation| {
        limits.primes.contains(&m.p())
            && m.dim() <= limits.max_dim
            && m.generators().len() <= limits.max_generators
            && lattice_size(m, limits.lattice_cap).is_some()
    };
    let mut seen: HashSet<(u32, usize, Vec<Matrix>)> = HashSet::new();
    let mut out = Vec::new();
    for m in fixed_instances() {
        if fits(&m) && seen.insert((m.p(), m.dim(), m.generators().to_vec())) {
            out.push(Instance::new(m));
        }
    }
    if limits.primes.is_empty() || limits.max_dim == 0 {
        return out;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let styles = [Style::Dense, Style::Nilpotent, Style::SparseUpper];
    let mut added = 0;
    let mut attempts = 0;
    while added < limits.random && attempts < 200 * (limits.random + 1) {
        attempts += 1;
        let p = limits.primes[rng.gen_range(0..limits.primes.len())];
        let m = rng.gen_range(1..=limits.max_dim);
        let k = rng.gen_range(0..=limits.max_generators);
        let style = styles[rng.gen_range(0..styles.len())];
        let gens: Vec<Matrix> = (0..k).map(|_| random_matrix(&mut rng, p, m, style)).collect();
        let label = format!("R{seed}-{added}");
        let module = ModulePresentation::new(p, m, gens, label).expect("random instance is well formed");
        if !fits(&module) || !seen.insert((p, m, module.generators().to_vec())) {
            continue;
        }
        out.push(Instance::new(module));
        added += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_come_first() {
        let c = generate_corpus(0, &CorpusLimits::default());
        let labels: Vec<&str> = c.iter().take(3).map(Instance::label).collect();
        assert_eq!(labels, ["B", "C", "D"]);
    }

    #[test]
    fn same_seed_same_corpus() {
        let l = CorpusLimits::default();
        assert_eq!(generate_corpus(7, &l), generate_corpus(7, &l));
        assert_ne!(generate_corpus(7, &l), generate_corpus(8, &l));
    }

    #[test]
    fn limits_are_respected() {
        let l = CorpusLimits {
            primes: vec![2],
            max_dim: 3,
            ..CorpusLimits::default()
        };
        for inst in generate_corpus(0, &l) {
            assert_eq!(inst.module.p(), 2);
            assert!(inst.module.dim() <= 3);
            assert!(enumerate_submodules(&inst.module, 1 << 16).unwrap().len() <= l.lattice_cap);
        }
    }
}
