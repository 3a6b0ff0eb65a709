//! Left primes and associated primes.
//!
//! For finite-length uniform modules, essential equivalence reduces to
//! isomorphism of the (simple) socles, so a left prime is represented by a
//! simple witness and two witnesses are identified when their hom space is
//! nonzero. Labels `X1, X2, ...` are only meaningful inside one
//! [`PrimeContext`].

use std::fmt;

use super::socle::{minimal_submodules, socle_decomposition};
use crate::error::{Error, Result};
use crate::modcore::{hom_space, quotient, ModulePresentation, Submodule};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeftPrime {
    index: usize,
    dim: usize,
    witness: Submodule,
}

impl LeftPrime {
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn label(&self) -> String {
        format!("X{}", self.index + 1)
    }

    /// Dimension of the simple witness.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Echelon basis of the witness inside the module where it was first
    /// registered.
    pub fn witness(&self) -> &Submodule {
        &self.witness
    }
}

impl fmt::Display for LeftPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X{}", self.index + 1)
    }
}

/// `As(M)` together with multiplicities, sorted by label.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AssociatedPrimes {
    entries: Vec<(LeftPrime, usize)>,
}

impl AssociatedPrimes {
    fn from_primes(primes: Vec<LeftPrime>) -> Self {
        let mut entries: Vec<(LeftPrime, usize)> = Vec::new();
        for x in primes {
            match entries.iter_mut().find(|(y, _)| y.index == x.index) {
                Some((_, k)) => *k += 1,
                None => entries.push((x, 1)),
            }
        }
        entries.sort_by_key(|(x, _)| x.index);
        Self { entries }
    }

    pub fn primes(&self) -> impl Iterator<Item = &LeftPrime> {
        self.entries.iter().map(|(x, _)| x)
    }

    pub fn entries(&self) -> &[(LeftPrime, usize)] {
        &self.entries
    }

    pub fn multiplicity(&self, x: &LeftPrime) -> usize {
        self.entries
            .iter()
            .find(|(y, _)| y.index == x.index)
            .map_or(0, |(_, k)| *k)
    }

    /// Number of distinct primes, `|As(M)|`.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of multiplicities; equals the uniform dimension.
    pub fn total(&self) -> usize {
        self.entries.iter().map(|(_, k)| k).sum()
    }

    /// The unique prime when `|As| = 1`.
    pub fn single(&self) -> Option<&LeftPrime> {
        match self.entries.as_slice() {
            [(x, _)] => Some(x),
            _ => None,
        }
    }

    pub fn indices(&self) -> Vec<usize> {
        self.entries.iter().map(|(x, _)| x.index).collect()
    }

    pub fn same_primes(&self, other: &AssociatedPrimes) -> bool {
        self.indices() == other.indices()
    }
}

impl fmt::Display for AssociatedPrimes {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "{{}}");
        }
        write!(f, "{{")?;
        for (i, (x, k)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if *k == 1 {
                write!(f, "{x}")?;
            } else {
                write!(f, "{x}^{k}")?;
            }
        }
        write!(f, "}}")
    }
}

/// Registry of left primes seen during one analysis.
#[derive(Clone, Debug, Default)]
pub struct PrimeContext {
    entries: Vec<(LeftPrime, ModulePresentation)>,
}

impl PrimeContext {
    pub fn new() -> Self {
        Self::default()
    }

    /// A context whose first labels are the primes of `m`, numbered in the
    /// canonical order of their first minimal-submodule witness.
    pub fn for_module(m: &ModulePresentation) -> Result<Self> {
        let mut ctx = Self::new();
        for s in minimal_submodules(m)? {
            let simple = m.restrict(&s)?;
            ctx.classify_simple(&simple, s)?;
        }
        Ok(ctx)
    }

    pub fn primes(&self) -> impl Iterator<Item = &LeftPrime> {
        self.entries.iter().map(|(x, _)| x)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The simple module registered for `x`.
    pub fn witness_module(&self, x: &LeftPrime) -> &ModulePresentation {
        &self.entries[x.index].1
    }

    /// Finds or registers the class of the simple module `simple`.
    pub fn classify_simple(&mut self, simple: &ModulePresentation, witness: Submodule) -> Result<LeftPrime> {
        for (x, rep) in &self.entries {
            if rep.dim() == simple.dim()
                && rep.generators().len() == simple.generators().len()
                && !hom_space(rep, simple)?.is_empty()
            {
                return Ok(x.clone());
            }
        }
        let x = LeftPrime {
            index: self.entries.len(),
            dim: simple.dim(),
            witness,
        };
        self.entries.push((x.clone(), simple.clone()));
        Ok(x)
    }

    /// The left prime `[U]` of a uniform module.
    pub fn left_prime_of(&mut self, u: &ModulePresentation) -> Result<LeftPrime> {
        let simples = socle_decomposition(u, 0)?;
        if simples.len() != 1 {
            return Err(Error::Precondition(format!(
                "left_prime_of needs a uniform module (u.dim is {})",
                simples.len()
            )));
        }
        let s = simples.into_iter().next().expect("one simple");
        let simple = u.restrict(&s)?;
        self.classify_simple(&simple, s)
    }

    /// Primes of the summands of the default socle decomposition, with
    /// multiplicities.
    pub fn associated_left_primes(&mut self, m: &ModulePresentation) -> Result<AssociatedPrimes> {
        let simples = socle_decomposition(m, 0)?;
        self.primes_of_summands(m, &simples)
    }

    /// Prime multiset of a given family of simple submodules of `m`.
    pub fn primes_of_summands(&mut self, m: &ModulePresentation, simples: &[Submodule]) -> Result<AssociatedPrimes> {
        let mut primes = Vec::with_capacity(simples.len());
        for s in simples {
            let simple = m.restrict(s)?;
            primes.push(self.classify_simple(&simple, s.clone())?);
        }
        Ok(AssociatedPrimes::from_primes(primes))
    }

    /// `As(M/N)`; `N` must be proper.
    pub fn quotient_primes(&mut self, m: &ModulePresentation, n: &Submodule) -> Result<AssociatedPrimes> {
        let q = quotient(m, n)?;
        self.associated_left_primes(&q.module)
    }

    /// `Some(X)` when `N` is `X`-primary in `M`.
    pub fn is_primary(&mut self, m: &ModulePresentation, n: &Submodule) -> Result<Option<LeftPrime>> {
        require_proper(m, n)?;
        Ok(self.quotient_primes(m, n)?.single().cloned())
    }
}

pub(crate) fn require_proper(m: &ModulePresentation, n: &Submodule) -> Result<()> {
    m.check_submodule(n)?;
    if n.dim() == m.dim() {
        return Err(Error::NotProper);
    }
    Ok(())
}

/// `N` is irreducible in `M` iff `M/N` is uniform.
pub fn is_irreducible(m: &ModulePresentation, n: &Submodule) -> Result<bool> {
    require_proper(m, n)?;
    let q = quotient(m, n)?;
    super::socle::is_uniform(&q.module)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modcore::{fixtures, Subspace};

    fn sub(m: &ModulePresentation, vs: &[Vec<u8>]) -> Submodule {
        m.submodule(Subspace::span(m.p(), m.dim(), vs).unwrap()).unwrap()
    }

    #[test]
    fn local_fixture_prime_is_its_socle_prime() {
        let b = fixtures::local();
        let mut ctx = PrimeContext::new();
        let whole = ctx.left_prime_of(&b).unwrap();
        let soc = b.restrict(&sub(&b, &[vec![1, 0]])).unwrap();
        assert_eq!(ctx.left_prime_of(&soc).unwrap().index(), whole.index());
    }

    #[test]
    fn split_fixture_has_two_primes() {
        let c = fixtures::split();
        let mut ctx = PrimeContext::for_module(&c).unwrap();
        let x1 = ctx.left_prime_of(&c.restrict(&sub(&c, &[vec![1, 0]])).unwrap()).unwrap();
        let x2 = ctx.left_prime_of(&c.restrict(&sub(&c, &[vec![0, 1]])).unwrap()).unwrap();
        assert_ne!(x1, x2);
        assert_eq!((x1.label(), x2.label()), ("X1".to_string(), "X2".to_string()));
        let as_c = ctx.associated_left_primes(&c).unwrap();
        assert_eq!(as_c.len(), 2);
        assert_eq!(as_c.total(), 2);
    }

    #[test]
    fn mixed_fixture_one_prime_twice() {
        let d = fixtures::mixed();
        let mut ctx = PrimeContext::for_module(&d).unwrap();
        let a = ctx.associated_left_primes(&d).unwrap();
        assert_eq!(a.len(), 1);
        assert_eq!(a.multiplicity(a.single().unwrap()), 2);
        assert_eq!(a.to_string(), "{X1^2}");
    }

    #[test]
    fn commutative_x2_plus_x_matches_split() {
        let c = fixtures::companion(2, &[0, 1, 1]);
        let mut ctx = PrimeContext::new();
        assert_eq!(ctx.associated_left_primes(&c).unwrap().len(), 2);
    }

    #[test]
    fn non_uniform_input_rejected() {
        let mut ctx = PrimeContext::new();
        assert!(matches!(ctx.left_prime_of(&fixtures::mixed()), Err(Error::Precondition(_))));
    }

    #[test]
    fn primary_and_irreducible() {
        let d = fixtures::mixed();
        let mut ctx = PrimeContext::new();
        assert!(ctx.is_primary(&d, &d.zero_submodule()).unwrap().is_some());
        assert!(!is_irreducible(&d, &d.zero_submodule()).unwrap());
        let c = fixtures::split();
        assert!(ctx.is_primary(&c, &c.zero_submodule()).unwrap().is_none());
        let maximal = sub(&d, &[vec![1, 0, 0], vec![0, 0, 1]]);
        assert!(is_irreducible(&d, &maximal).unwrap());
        assert!(ctx.is_primary(&d, &maximal).unwrap().is_some());
        assert_eq!(ctx.is_primary(&d, &d.full_submodule()), Err(Error::NotProper));
        assert_eq!(is_irreducible(&d, &d.full_submodule()), Err(Error::NotProper));
    }
}
