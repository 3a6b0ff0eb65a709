//! Construction and exhaustive enumeration of shortest primary and shortest
//! uniform decompositions.
//!
//! Both constructions start from an essential direct sum of uniform
//! submodules of `M/N` (here: a socle decomposition), take for each block a
//! complement containing the other blocks, and pull the complements back to
//! `M`. The primary version first merges the blocks sharing a left prime.
//! The enumerators range over every admissible tuple of blocks, every
//! complement and every intermediate part between the other blocks and the
//! complement.

use std::collections::BTreeSet;
use std::fmt;

use super::complement::{complement, complements_over};
use super::primes::{require_proper, AssociatedPrimes, PrimeContext};
use super::socle::{socle, socle_decomposition, socle_decompositions};
use super::workspace::Workspace;
use crate::error::{Error, Result};
use crate::modcore::{quotient, ModulePresentation, QuotientPresentation, Submodule, SubmoduleLattice};
use crate::Caps;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Primary,
    Uniform,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Primary => "primary",
            Kind::Uniform => "uniform",
        })
    }
}

/// `shortest` and `maximal` are relative to the decomposition's [`Kind`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct DecompositionFlags {
    pub primary: bool,
    pub uniform: bool,
    pub irredundant: bool,
    pub shortest: bool,
    pub maximal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub kind: Kind,
    pub base: Submodule,
    pub parts: Vec<Submodule>,
    /// `As(M / N_i)` for each part.
    pub part_primes: Vec<AssociatedPrimes>,
    /// `As(M / N)`.
    pub base_primes: AssociatedPrimes,
    pub flags: DecompositionFlags,
}

impl Decomposition {
    /// Parts sorted canonically; two decompositions are the same iff these
    /// agree.
    pub fn canonical_parts(&self) -> Vec<Submodule> {
        canonical(self.parts.clone())
    }
}

pub(crate) fn canonical(mut parts: Vec<Submodule>) -> Vec<Submodule> {
    parts.sort();
    parts.dedup();
    parts
}

fn check_flags_of(
    m: &ModulePresentation,
    base: &Submodule,
    parts: &[Submodule],
    part_primes: &[AssociatedPrimes],
) -> Result<(bool, bool, bool)> {
    let primary = part_primes.iter().all(|a| a.len() == 1);
    let uniform = part_primes.iter().all(|a| a.total() == 1);
    let irredundant = super::check::cofactors(m, parts)?
        .iter()
        .all(|u| u != base);
    Ok((primary, uniform, irredundant))
}

fn assemble(
    m: &ModulePresentation,
    base: &Submodule,
    kind: Kind,
    parts: Vec<Submodule>,
    part_primes: Vec<AssociatedPrimes>,
    base_primes: AssociatedPrimes,
    maximal: bool,
) -> Result<Decomposition> {
    let (primary, uniform, irredundant) = check_flags_of(m, base, &parts, &part_primes)?;
    let target = match kind {
        Kind::Primary => base_primes.len(),
        Kind::Uniform => base_primes.total(),
    };
    let shortest = parts.len() == target
        && match kind {
            Kind::Primary => primary,
            Kind::Uniform => uniform,
        };
    Ok(Decomposition {
        kind,
        base: base.clone(),
        parts,
        part_primes,
        base_primes,
        flags: DecompositionFlags {
            primary,
            uniform,
            irredundant,
            shortest,
            maximal,
        },
    })
}

/// Blocks of a socle decomposition of `q`: one per simple for the uniform
/// kind; for the primary kind, the sum of the simples sharing a prime,
/// ordered by prime label.
fn blocks(
    q: &ModulePresentation,
    ctx: &mut PrimeContext,
    simples: &[Submodule],
    kind: Kind,
) -> Result<Vec<Submodule>> {
    match kind {
        Kind::Uniform => Ok(simples.to_vec()),
        Kind::Primary => {
            let mut groups: Vec<(usize, Submodule)> = Vec::new();
            for s in simples {
                let x = ctx.classify_simple(&q.restrict(s)?, s.clone())?;
                match groups.iter_mut().find(|(i, _)| *i == x.index()) {
                    Some((_, acc)) => *acc = q.sum(acc, s)?,
                    None => groups.push((x.index(), s.clone())),
                }
            }
            groups.sort_by_key(|(i, _)| *i);
            Ok(groups.into_iter().map(|(_, b)| b).collect())
        }
    }
}

fn others(q: &ModulePresentation, blocks: &[Submodule], skip: usize) -> Result<Submodule> {
    let mut acc = q.zero_submodule();
    for (j, b) in blocks.iter().enumerate() {
        if j != skip {
            acc = q.sum(&acc, b)?;
        }
    }
    Ok(acc)
}

fn finish(
    m: &ModulePresentation,
    n: &Submodule,
    q: &QuotientPresentation,
    ctx: &mut PrimeContext,
    kind: Kind,
    complements: &[Submodule],
) -> Result<Decomposition> {
    let base_primes = ctx.associated_left_primes(&q.module)?;
    let mut parts = Vec::with_capacity(complements.len());
    let mut part_primes = Vec::with_capacity(complements.len());
    for c in complements {
        let part = q.preimage(c)?;
        part_primes.push(ctx.quotient_primes(m, &part)?);
        parts.push(part);
    }
    assemble(m, n, kind, parts, part_primes, base_primes, true)
}

fn construct_default(m: &ModulePresentation, n: &Submodule, kind: Kind) -> Result<Decomposition> {
    require_proper(m, n)?;
    let q = quotient(m, n)?;
    let mut ctx = PrimeContext::for_module(&q.module)?;
    let simples = socle_decomposition(&q.module, 0)?;
    let bl = blocks(&q.module, &mut ctx, &simples, kind)?;
    let mut comps = Vec::with_capacity(bl.len());
    for (i, b) in bl.iter().enumerate() {
        comps.push(complement(&q.module, b, &others(&q.module, &bl, i)?)?);
    }
    finish(m, n, &q, &mut ctx, kind, &comps)
}

/// Every construction path, in order: socle decompositions in their
/// canonical order, then complement tuples in mixed radix (last block
/// fastest), each complement list in canonical order. Paths may repeat a
/// decomposition.
pub fn construction_paths(m: &ModulePresentation, n: &Submodule, kind: Kind, caps: &Caps) -> Result<Vec<Decomposition>> {
    require_proper(m, n)?;
    let q = quotient(m, n)?;
    let mut ctx = PrimeContext::for_module(&q.module)?;
    let lattice = SubmoduleLattice::new(&q.module, caps.vectors)?;
    let zero = q.module.zero_submodule();
    let mut out = Vec::new();
    for simples in socle_decompositions(&q.module, caps.search)? {
        let bl = blocks(&q.module, &mut ctx, &simples, kind)?;
        let mut lists = Vec::with_capacity(bl.len());
        for (i, b) in bl.iter().enumerate() {
            let r = others(&q.module, &bl, i)?;
            lists.push(complements_over(&lattice, &zero, b, &r)?);
        }
        let mut digits = vec![0usize; lists.len()];
        loop {
            if out.len() as u64 >= caps.search {
                return Err(Error::resource("construction paths", out.len() as u128 + 1, caps.search as u128));
            }
            let comps: Vec<Submodule> = digits
                .iter()
                .zip(&lists)
                .map(|(&d, l)| lattice.get(l[d]).clone())
                .collect();
            out.push(finish(m, n, &q, &mut ctx, kind, &comps)?);
            if !advance(&mut digits, &lists.iter().map(Vec::len).collect::<Vec<_>>()) {
                break;
            }
        }
    }
    Ok(out)
}

/// Mixed-radix increment, last digit fastest. Returns `false` on wrap.
fn advance(digits: &mut [usize], radix: &[usize]) -> bool {
    for i in (0..digits.len()).rev() {
        digits[i] += 1;
        if digits[i] < radix[i] {
            return true;
        }
        digits[i] = 0;
    }
    false
}

fn construct(m: &ModulePresentation, n: &Submodule, kind: Kind, choice: Option<usize>) -> Result<Decomposition> {
    match choice {
        None => construct_default(m, n, kind),
        Some(k) => {
            let paths = construction_paths(m, n, kind, &Caps::default())?;
            let total = paths.len();
            paths.into_iter().nth(k).ok_or_else(|| {
                Error::Precondition(format!("choice {k} out of range ({total} construction paths)"))
            })
        }
    }
}

/// A maximal shortest primary decomposition `N = C_1 ∩ ... ∩ C_s`, one part
/// per associated prime of `M/N`, parts in prime-label order. `choice`
/// selects a construction path (see [`construction_paths`]); `None` is the
/// greedy default.
pub fn maximal_shortest_primary(m: &ModulePresentation, n: &Submodule, choice: Option<usize>) -> Result<Decomposition> {
    construct(m, n, Kind::Primary, choice)
}

/// A maximal shortest uniform decomposition, one part per summand of a
/// socle decomposition of `M/N`.
pub fn maximal_shortest_uniform(m: &ModulePresentation, n: &Submodule, choice: Option<usize>) -> Result<Decomposition> {
    construct(m, n, Kind::Uniform, choice)
}

/// Every shortest primary decomposition of `n` in `m`.
pub fn enumerate_shortest_primary(m: &ModulePresentation, n: &Submodule, caps: &Caps) -> Result<Vec<Decomposition>> {
    enumerate(m, n, Kind::Primary, false, caps)
}

/// Every maximal shortest primary decomposition (parts are the complements
/// themselves).
pub fn enumerate_maximal_shortest_primary(
    m: &ModulePresentation,
    n: &Submodule,
    caps: &Caps,
) -> Result<Vec<Decomposition>> {
    enumerate(m, n, Kind::Primary, true, caps)
}

pub fn enumerate_shortest_uniform(m: &ModulePresentation, n: &Submodule, caps: &Caps) -> Result<Vec<Decomposition>> {
    enumerate(m, n, Kind::Uniform, false, caps)
}

pub fn enumerate_maximal_shortest_uniform(
    m: &ModulePresentation,
    n: &Submodule,
    caps: &Caps,
) -> Result<Vec<Decomposition>> {
    enumerate(m, n, Kind::Uniform, true, caps)
}

struct Search<'w> {
    ws: &'w Workspace,
    kind: Kind,
    maximal_only: bool,
    /// Candidate blocks per slot (primary) or one shared list (uniform).
    slots: Vec<Vec<usize>>,
    socle: crate::modcore::Subspace,
    width: usize,
    steps: u64,
    cap: u64,
    found: BTreeSet<Vec<Submodule>>,
}

impl Search<'_> {
    fn tick(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.cap {
            return Err(Error::resource("decomposition enumeration", self.steps as u128, self.cap as u128));
        }
        Ok(())
    }

    fn slot_candidates(&self, slot: usize) -> &[usize] {
        match self.kind {
            Kind::Primary => &self.slots[slot],
            Kind::Uniform => &self.slots[0],
        }
    }

    fn run(&mut self) -> Result<()> {
        let mut chosen = Vec::with_capacity(self.width);
        let base = self.ws.n.subspace().clone();
        self.blocks(&mut chosen, base, 0, 0)
    }

    /// Chooses blocks one slot at a time, keeping the sum direct over `N`.
    /// For the uniform kind the candidates are taken in increasing position
    /// so each unordered tuple is visited once.
    fn blocks(
        &mut self,
        chosen: &mut Vec<usize>,
        acc: crate::modcore::Subspace,
        excess: usize,
        from: usize,
    ) -> Result<()> {
        self.tick()?;
        let slot = chosen.len();
        if slot == self.width {
            if self.socle.is_subspace_of(&acc) {
                self.expand(chosen)?;
            }
            return Ok(());
        }
        let n_dim = self.ws.n.dim();
        let cands = self.slot_candidates(slot).to_vec();
        let start = if self.kind == Kind::Uniform { from } else { 0 };
        for (pos, &w) in cands.iter().enumerate().skip(start) {
            let wd = self.ws.get(w).dim() - n_dim;
            let next = acc.sum(self.ws.get(w))?;
            if next.dim() - n_dim != excess + wd {
                continue;
            }
            chosen.push(w);
            self.blocks(chosen, next, excess + wd, pos + 1)?;
            chosen.pop();
        }
        Ok(())
    }

    fn admissible_part(&self, k: usize, block: usize) -> bool {
        let primes = self.ws.quo_primes(k);
        match self.kind {
            Kind::Primary => primes.len() == 1 && primes.same_primes(self.ws.sub_primes(block)),
            Kind::Uniform => primes.total() == 1,
        }
    }

    fn expand(&mut self, chosen: &[usize]) -> Result<()> {
        let mut options: Vec<Vec<usize>> = Vec::with_capacity(chosen.len());
        for (i, &w) in chosen.iter().enumerate() {
            let rest: Vec<usize> = chosen.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x).collect();
            let r = self.ws.sum_of(&rest)?;
            let r = crate::modcore::Submodule::from_invariant(r);
            let comps = complements_over(&self.ws.lattice, &self.ws.n, self.ws.get(w), &r)?;
            let opts: Vec<usize> = if self.maximal_only {
                comps
            } else {
                self.ws
                    .above
                    .iter()
                    .copied()
                    .filter(|&k| {
                        let kk = self.ws.get(k);
                        r.is_subspace_of(kk)
                            && comps.iter().any(|&c| kk.is_subspace_of(self.ws.get(c)))
                            && self.admissible_part(k, w)
                    })
                    .collect()
            };
            if opts.is_empty() {
                return Ok(());
            }
            options.push(opts);
        }
        let radix: Vec<usize> = options.iter().map(Vec::len).collect();
        let mut digits = vec![0usize; options.len()];
        loop {
            self.tick()?;
            let parts: Vec<Submodule> = digits
                .iter()
                .zip(&options)
                .map(|(&d, o)| self.ws.get(o[d]).clone())
                .collect();
            self.found.insert(canonical(parts));
            if !advance(&mut digits, &radix) {
                break;
            }
        }
        Ok(())
    }
}

fn enumerate(m: &ModulePresentation, n: &Submodule, kind: Kind, maximal_only: bool, caps: &Caps) -> Result<Vec<Decomposition>> {
    require_proper(m, n)?;
    let ws = Workspace::new(m, n, caps)?;
    let top = ws.top_primes().clone();
    let proper_above: Vec<usize> = ws.above.iter().copied().filter(|&w| w != ws.n_idx).collect();
    let (slots, width) = match kind {
        Kind::Primary => {
            let slots: Vec<Vec<usize>> = top
                .primes()
                .map(|x| {
                    proper_above
                        .iter()
                        .copied()
                        .filter(|&w| ws.sub_primes(w).single().map(|y| y.index()) == Some(x.index()))
                        .collect()
                })
                .collect();
            (slots, top.len())
        }
        Kind::Uniform => {
            let cands: Vec<usize> = proper_above
                .iter()
                .copied()
                .filter(|&w| ws.sub_primes(w).total() == 1)
                .collect();
            (vec![cands], top.total())
        }
    };
    let q = quotient(m, n)?;
    let soc = q.preimage(&socle(&q.module)?)?;
    let mut search = Search {
        ws: &ws,
        kind,
        maximal_only,
        slots,
        socle: soc.into_subspace(),
        width,
        steps: 0,
        cap: caps.search,
        found: BTreeSet::new(),
    };
    search.run()?;
    let found = std::mem::take(&mut search.found);
    let mut out = Vec::with_capacity(found.len());
    for parts in found {
        let idx: Vec<usize> = parts
            .iter()
            .map(|p| ws.index_of(p).expect("lattice element"))
            .collect();
        let part_primes: Vec<AssociatedPrimes> = idx.iter().map(|&i| ws.quo_primes(i).clone()).collect();
        let maximal = if maximal_only {
            true
        } else {
            ws.is_maximal(&idx, |old, new| same_kind(&ws, kind, old, new))?
        };
        out.push(assemble(m, n, kind, parts, part_primes, top.clone(), maximal)?);
    }
    Ok(out)
}

pub(crate) fn same_kind(ws: &Workspace, kind: Kind, old: usize, new: usize) -> bool {
    let (a, b) = (ws.quo_primes(old), ws.quo_primes(new));
    match kind {
        Kind::Primary => b.len() == 1 && a.same_primes(b),
        Kind::Uniform => a.total() == 1 && b.total() == 1,
    }
}

/// A uniform refinement of a primary decomposition together with the index
/// blocks `I_j`: part `j` of the input is the intersection of the refined
/// parts listed in `blocks[j]`.
#[derive(Clone, Debug)]
pub struct Refinement {
    pub decomposition: Decomposition,
    pub blocks: Vec<Vec<usize>>,
}

/// Replaces each part `N_i` of a primary decomposition of `n` by a shortest
/// uniform decomposition of `N_i` in `m`.
pub fn refine_to_uniform(m: &ModulePresentation, n: &Submodule, parts: &[Submodule]) -> Result<Refinement> {
    require_proper(m, n)?;
    if parts.is_empty() {
        return Err(Error::Precondition("refine_to_uniform: no parts".into()));
    }
    let q = quotient(m, n)?;
    let mut ctx = PrimeContext::for_module(&q.module)?;
    let base_primes = ctx.associated_left_primes(&q.module)?;
    let mut inter = m.full_submodule();
    for p in parts {
        inter = m.intersect(&inter, p)?;
    }
    if inter != *n {
        return Err(Error::Precondition("refine_to_uniform: parts do not intersect to N".into()));
    }
    let mut refined = Vec::new();
    let mut refined_primes = Vec::new();
    let mut blocks = Vec::with_capacity(parts.len());
    for p in parts {
        if !n.is_subspace_of(p) || p.dim() == m.dim() {
            return Err(Error::Precondition(format!("refine_to_uniform: bad part {p}")));
        }
        let primes = ctx.quotient_primes(m, p)?;
        if primes.len() != 1 {
            return Err(Error::Precondition(format!(
                "refine_to_uniform: part {p} is not primary (As = {primes})"
            )));
        }
        let pieces = if primes.total() == 1 {
            vec![p.clone()]
        } else {
            construct_default(m, p, Kind::Uniform)?.parts
        };
        let mut block = Vec::with_capacity(pieces.len());
        for piece in pieces {
            block.push(refined.len());
            refined_primes.push(ctx.quotient_primes(m, &piece)?);
            refined.push(piece);
        }
        blocks.push(block);
    }
    let decomposition = assemble(m, n, Kind::Uniform, refined, refined_primes, base_primes, false)?;
    Ok(Refinement { decomposition, blocks })
}
