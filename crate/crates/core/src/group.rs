//! Permutation-group algorithms: stabilizer chains, orbits, stabilizers,
//! coset actions, transitivity and primitivity tests.
//!
//! Chains are built by a randomized Schreier–Sims pass (fixed seed, so the
//! result is deterministic for a given generator order) followed by a full
//! deterministic verification sweep over all Schreier generators. Every
//! `PermGroup` therefore carries a verified base and strong generating set.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::perm::{Permutation, PermError, Point};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("no generators given")]
    NoGenerators,
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("empty point set")]
    EmptySet,
    #[error("{0} is not a subgroup member")]
    NotSubgroup(String),
    #[error("coset index {0} exceeds the supported bound {1}")]
    IndexOverflow(u64, u64),
    #[error("group is not transitive")]
    NotTransitive,
}

struct ChainLevel {
    base: Point,
    /// Strong generators that fix all earlier base points.
    gens: Vec<Permutation>,
    /// Fundamental orbit of `base`, in BFS discovery order.
    orbit: Vec<Point>,
    /// transversal[p-1]: u with base^u = p, and its inverse.
    transversal: Vec<Option<(Permutation, Permutation)>>,
}

impl ChainLevel {
    fn new(degree: usize, base: Point) -> Self {
        let mut level = ChainLevel {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            transversal: vec![None; degree],
        };
        let id = Permutation::identity(degree);
        level.transversal[base - 1] = Some((id.clone(), id));
        level
    }

    /// Rebuilds orbit and transversal from scratch (BFS, generators in order).
    fn recompute_orbit(&mut self, degree: usize) {
        for t in self.transversal.iter_mut() {
            *t = None;
        }
        let id = Permutation::identity(degree);
        self.transversal[self.base - 1] = Some((id.clone(), id));
        self.orbit = vec![self.base];
        let mut head = 0;
        while head < self.orbit.len() {
            let p = self.orbit[head];
            head += 1;
            let rep = self.transversal[p - 1].as_ref().unwrap().0.clone();
            for g in &self.gens {
                let q = g.apply(p);
                if self.transversal[q - 1].is_none() {
                    let u = rep.mul(g);
                    let uinv = u.inverse();
                    self.transversal[q - 1] = Some((u, uinv));
                    self.orbit.push(q);
                }
            }
        }
    }
}

/// A permutation group with a verified stabilizer chain. Immutable after
/// construction; all queries are read-only.
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: Vec<ChainLevel>,
    order: u64,
}

impl PermGroup {
    /// The trivial group on `degree` points.
    pub fn identity(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            chain: Vec::new(),
            order: 1,
        }
    }

    /// Builds a group from generators; deterministic given generator order.
    pub fn from_generators(gens: &[Permutation]) -> Result<Self, GroupError> {
        if gens.is_empty() {
            return Err(GroupError::NoGenerators);
        }
        let degree = gens[0].degree();
        for g in gens {
            if g.degree() != degree {
                return Err(GroupError::Perm(PermError::DegreeMismatch(
                    degree,
                    g.degree(),
                )));
            }
        }
        let kept: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let chain = build_chain(degree, &kept, &[]);
        let order = chain_order(&chain);
        Ok(PermGroup {
            degree,
            generators: kept,
            chain,
            order,
        })
    }

    /// Like `from_generators` but forces the chain's base to start with the
    /// given points (used for stabilizer extraction).
    fn from_generators_with_base(
        gens: &[Permutation],
        degree: usize,
        base_prefix: &[Point],
    ) -> Self {
        let kept: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let chain = build_chain(degree, &kept, base_prefix);
        let order = chain_order(&chain);
        PermGroup {
            degree,
            generators: kept,
            chain,
            order,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Exact group order (product of fundamental orbit lengths).
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Base points of the stabilizer chain.
    pub fn base(&self) -> Vec<Point> {
        self.chain.iter().map(|l| l.base).collect()
    }

    /// Membership by sifting through the chain.
    pub fn contains(&self, p: &Permutation) -> Result<bool, GroupError> {
        if p.degree() != self.degree {
            return Err(GroupError::Perm(PermError::DegreeMismatch(
                self.degree,
                p.degree(),
            )));
        }
        Ok(self.sift(p).is_none())
    }

    /// Returns the residue witness if `p` fails to sift to the identity.
    fn sift(&self, p: &Permutation) -> Option<Permutation> {
        let mut g = p.clone();
        for level in &self.chain {
            if g.is_identity() {
                return None;
            }
            let image = g.apply(level.base);
            match &level.transversal[image - 1] {
                Some((_, uinv)) => g = g.mul(uinv),
                None => return Some(g),
            }
        }
        if g.is_identity() {
            None
        } else {
            Some(g)
        }
    }

    /// The orbit of `x`, sorted ascending.
    pub fn orbit(&self, x: Point) -> Result<Vec<Point>, GroupError> {
        if x == 0 || x > self.degree {
            return Err(GroupError::PointOutOfRange {
                point: x,
                degree: self.degree,
            });
        }
        let mut seen = vec![false; self.degree];
        seen[x - 1] = true;
        let mut queue = vec![x];
        let mut head = 0;
        while head < queue.len() {
            let p = queue[head];
            head += 1;
            for g in &self.generators {
                let q = g.apply(p);
                if !seen[q - 1] {
                    seen[q - 1] = true;
                    queue.push(q);
                }
            }
        }
        queue.sort_unstable();
        Ok(queue)
    }

    /// The point stabilizer as a group with its own verified chain.
    pub fn stabilizer(&self, x: Point) -> Result<PermGroup, GroupError> {
        if x == 0 || x > self.degree {
            return Err(GroupError::PointOutOfRange {
                point: x,
                degree: self.degree,
            });
        }
        // Rebuild a chain whose base starts at x; strong generators of the
        // deeper levels generate the stabilizer.
        let rebased = PermGroup::from_generators_with_base(&self.generators, self.degree, &[x]);
        let mut stab_gens: Vec<Permutation> = Vec::new();
        let mut seen: HashSet<Permutation> = HashSet::new();
        for level in rebased.chain.iter().skip(1) {
            for g in &level.gens {
                if seen.insert(g.clone()) {
                    stab_gens.push(g.clone());
                }
            }
        }
        if stab_gens.is_empty() {
            return Ok(PermGroup::identity(self.degree));
        }
        Ok(PermGroup::from_generators(&stab_gens)?)
    }

    pub fn is_transitive(&self) -> bool {
        self.degree > 0 && self.orbit(1).map(|o| o.len() == self.degree).unwrap_or(false)
    }

    /// Primitivity via per-pair finest-block refinement (union-find).
    ///
    /// For each point b != 1, builds the finest block system whose block
    /// contains {1, b}; the group is imprimitive iff some attempt yields a
    /// block of size strictly between 1 and the degree.
    pub fn is_primitive(&self) -> Result<bool, GroupError> {
        if !self.is_transitive() {
            return Err(GroupError::NotTransitive);
        }
        if self.degree < 2 {
            return Err(GroupError::NotTransitive);
        }
        for beta in 2..=self.degree {
            let block = self.finest_block_containing(1, beta);
            if block < self.degree {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Size of the block containing {a, b} in the finest G-congruence that
    /// merges a and b.
    fn finest_block_containing(&self, a: Point, b: Point) -> usize {
        let n = self.degree;
        let mut uf = UnionFind::new(n);
        let mut queue: Vec<(Point, Point)> = vec![(a, b)];
        uf.union(a - 1, b - 1);
        while let Some((x, y)) = queue.pop() {
            for g in &self.generators {
                let gx = g.apply(x);
                let gy = g.apply(y);
                if uf.union(gx - 1, gy - 1) {
                    queue.push((gx, gy));
                }
            }
        }
        let root = uf.find(a - 1);
        (0..n).filter(|&i| uf.find(i) == root).count()
    }

    /// Orbit of a point set under the induced action on subsets, in BFS
    /// discovery order (sets stored sorted, queue FIFO).
    pub fn set_orbit(&self, seed: &[Point]) -> Result<Vec<Vec<Point>>, GroupError> {
        self.set_orbit_bounded(seed, u64::MAX)
            .map(|r| r.expect("unbounded set orbit"))
    }

    /// Like `set_orbit` but gives up (returning Ok(None)) once the orbit
    /// exceeds `cap` elements.
    pub fn set_orbit_bounded(
        &self,
        seed: &[Point],
        cap: u64,
    ) -> Result<Option<Vec<Vec<Point>>>, GroupError> {
        if seed.is_empty() {
            return Err(GroupError::EmptySet);
        }
        for &p in seed {
            if p == 0 || p > self.degree {
                return Err(GroupError::PointOutOfRange {
                    point: p,
                    degree: self.degree,
                });
            }
        }
        assert!(
            self.degree <= MASK_WORDS * 64,
            "set_orbit supports degree <= {}",
            MASK_WORDS * 64
        );
        let mut start = Mask::default();
        for &p in seed {
            start.set(p);
        }
        let mut seen: HashSet<Mask> = HashSet::new();
        seen.insert(start);
        let mut queue: Vec<Mask> = vec![start];
        let mut head = 0;
        while head < queue.len() {
            let m = queue[head];
            head += 1;
            for g in &self.generators {
                let im = m.apply(g, self.degree);
                if seen.insert(im) {
                    if seen.len() as u64 > cap {
                        return Ok(None);
                    }
                    queue.push(im);
                }
            }
        }
        Ok(Some(
            queue.iter().map(|m| m.to_points(self.degree)).collect(),
        ))
    }

    /// Size of the set orbit, or None when it exceeds `cap`.
    pub fn set_orbit_size_bounded(&self, seed: &[Point], cap: u64) -> Result<Option<u64>, GroupError> {
        Ok(self
            .set_orbit_bounded(seed, cap)?
            .map(|blocks| blocks.len() as u64))
    }

    /// Transitive action of the group on the right cosets of `h`.
    ///
    /// Labels are assigned breadth-first from the trivial coset using this
    /// group's generators in order; coset equality is decided by membership
    /// of g1·g2⁻¹ in `h`.
    pub fn coset_action(&self, h: &PermGroup) -> Result<CosetActionResult, GroupError> {
        if h.degree() != self.degree {
            return Err(GroupError::Perm(PermError::DegreeMismatch(
                self.degree,
                h.degree(),
            )));
        }
        for g in h.generators() {
            if !self.contains(g)? {
                return Err(GroupError::NotSubgroup(g.to_cycle_string()));
            }
        }
        let index = self.order() / h.order();
        const INDEX_BOUND: u64 = 1_000_000;
        if index > INDEX_BOUND {
            return Err(GroupError::IndexOverflow(index, INDEX_BOUND));
        }
        let m = index as usize;
        let id = Permutation::identity(self.degree);
        let mut reps: Vec<Permutation> = Vec::with_capacity(m);
        let mut rep_invs: Vec<Permutation> = Vec::with_capacity(m);
        reps.push(id.clone());
        rep_invs.push(id);
        // image_of[i][j] = label of coset reps[i] * gens[j]
        let mut images: Vec<Vec<usize>> = Vec::with_capacity(m);
        let mut head = 0;
        while head < reps.len() {
            let rep = reps[head].clone();
            let mut row = Vec::with_capacity(self.generators.len());
            for g in &self.generators {
                let cand = rep.mul(g);
                let mut found = None;
                for (i, rinv) in rep_invs.iter().enumerate() {
                    if h.contains(&cand.mul(rinv))? {
                        found = Some(i);
                        break;
                    }
                }
                let label = match found {
                    Some(i) => i,
                    None => {
                        rep_invs.push(cand.inverse());
                        reps.push(cand);
                        reps.len() - 1
                    }
                };
                row.push(label);
            }
            images.push(row);
            head += 1;
        }
        debug_assert_eq!(reps.len(), m, "coset count disagrees with index");
        let image_gens: Vec<Permutation> = (0..self.generators.len())
            .map(|j| {
                let table: Vec<Point> = (0..m).map(|i| images[i][j] + 1).collect();
                Permutation::from_images(&table).expect("induced coset map must be a bijection")
            })
            .collect();
        let image_group = PermGroup::from_generators(&image_gens)?;
        Ok(CosetActionResult {
            image: image_group,
            labeling: reps,
        })
    }

    /// Orbit-length signature of a subgroup `h` acting on `1..=ambient_degree`.
    pub fn subgroup_orbits(ambient_degree: usize, h: &PermGroup) -> OrbitSignature {
        let mut seen = vec![false; ambient_degree];
        let mut orbits: Vec<Vec<Point>> = Vec::new();
        for start in 1..=ambient_degree {
            if seen[start - 1] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start - 1] = true;
            let mut head = 0;
            while head < orbit.len() {
                let p = orbit[head];
                head += 1;
                for g in h.generators() {
                    let q = g.apply(p);
                    if !seen[q - 1] {
                        seen[q - 1] = true;
                        orbit.push(q);
                    }
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        let mut lengths: Vec<usize> = orbits.iter().map(|o| o.len()).collect();
        lengths.sort_unstable();
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for len in lengths {
            match pairs.last_mut() {
                Some((l, mult)) if *l == len => *mult += 1,
                _ => pairs.push((len, 1)),
            }
        }
        OrbitSignature { pairs, orbits }
    }

    /// A uniformly random element (used by property tests).
    pub fn random_element(&self, rng: &mut impl Rng) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for level in &self.chain {
            let p = level.orbit[rng.gen_range(0..level.orbit.len())];
            let (u, _) = level.transversal[p - 1].as_ref().unwrap();
            // left-to-right: deeper reps act first
            g = u.mul(&g);
        }
        g
    }
}

/// Result of a coset action: the image group of degree [G:H] plus the coset
/// representatives; position i is the representative of the coset labeled
/// i+1, and the first representative is the identity (trivial coset).
pub struct CosetActionResult {
    pub image: PermGroup,
    pub labeling: Vec<Permutation>,
}

/// Multiset of orbit lengths, as (length, multiplicity) pairs sorted by
/// length, plus the orbits themselves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitSignature {
    pub pairs: Vec<(usize, usize)>,
    pub orbits: Vec<Vec<Point>>,
}

impl OrbitSignature {
    pub fn total(&self) -> usize {
        self.pairs.iter().map(|(l, m)| l * m).sum()
    }
}

const MASK_WORDS: usize = 5; // supports degree <= 320; largest in scope is 280

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
struct Mask {
    words: [u64; MASK_WORDS],
}

impl Mask {
    #[inline]
    fn set(&mut self, p: Point) {
        self.words[(p - 1) >> 6] |= 1u64 << ((p - 1) & 63);
    }

    #[inline]
    fn apply(&self, g: &Permutation, degree: usize) -> Mask {
        let mut out = Mask::default();
        for w in 0..MASK_WORDS {
            let mut bits = self.words[w];
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let p = (w << 6) + b + 1;
                if p <= degree {
                    out.set(g.apply(p));
                }
            }
        }
        out
    }

    fn to_points(self, degree: usize) -> Vec<Point> {
        let mut out = Vec::new();
        for w in 0..MASK_WORDS {
            let mut bits = self.words[w];
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let p = (w << 6) + b + 1;
                if p <= degree {
                    out.push(p);
                }
            }
        }
        out
    }
}

fn chain_order(chain: &[ChainLevel]) -> u64 {
    chain.iter().map(|l| l.orbit.len() as u64).product()
}

/// Incremental Schreier–Sims. The randomized phase sifts random subproducts
/// to populate the chain quickly; the deterministic sweep then checks every
/// Schreier generator at every level, so the returned chain is verified.
fn build_chain(degree: usize, gens: &[Permutation], base_prefix: &[Point]) -> Vec<ChainLevel> {
    let mut builder = ChainBuilder {
        degree,
        levels: Vec::new(),
        base_prefix: base_prefix.to_vec(),
    };
    for g in gens {
        builder.add_generator(0, g.clone());
    }
    if !gens.is_empty() {
        builder.randomized_fill(gens);
    }
    builder.verify_sweep();
    builder.levels
}

struct ChainBuilder {
    degree: usize,
    levels: Vec<ChainLevel>,
    base_prefix: Vec<Point>,
}

impl ChainBuilder {
    fn pick_base(&self, level: usize, g: &Permutation) -> Point {
        if level < self.base_prefix.len() {
            return self.base_prefix[level];
        }
        (1..=self.degree)
            .find(|&p| g.apply(p) != p)
            .expect("non-identity permutation moves a point")
    }

    /// Adds `g` (known to fix base points of levels < `level`) as a strong
    /// generator, then restores the chain condition below it.
    fn add_generator(&mut self, level: usize, g: Permutation) {
        if g.is_identity() {
            return;
        }
        if level == self.levels.len() {
            let base = self.pick_base(level, &g);
            self.levels.push(ChainLevel::new(self.degree, base));
        }
        // A forced base point may be fixed by g; push g further down.
        if level < self.levels.len() && g.apply(self.levels[level].base) == self.levels[level].base
        {
            // g fixes this level's base; it belongs deeper
            if self.levels[level].gens.iter().any(|h| *h == g) {
                return;
            }
            self.add_generator(level + 1, g);
            return;
        }
        if self.levels[level].gens.iter().any(|h| *h == g) {
            return;
        }
        self.levels[level].gens.push(g);
        self.levels[level].recompute_orbit(self.degree);
        self.close_level(level);
    }

    /// Sifts all Schreier generators of `level`; residues become strong
    /// generators one level deeper.
    fn close_level(&mut self, level: usize) {
        loop {
            let mut dirty = false;
            let orbit = self.levels[level].orbit.clone();
            let gen_count = self.levels[level].gens.len();
            'outer: for &p in &orbit {
                for gi in 0..gen_count {
                    let schreier = {
                        let l = &self.levels[level];
                        let (u, _) = l.transversal[p - 1].as_ref().unwrap();
                        let g = &l.gens[gi];
                        let q = g.apply(p);
                        let (_, vinv) = l.transversal[q - 1].as_ref().unwrap();
                        u.mul(g).mul(vinv)
                    };
                    if let Some(residue) = self.sift_from(level + 1, &schreier) {
                        self.add_generator(level + 1, residue);
                        dirty = true;
                        // level's orbit may have changed via recursion
                        break 'outer;
                    }
                }
            }
            if !dirty {
                return;
            }
        }
    }

    fn sift_from(&self, start: usize, p: &Permutation) -> Option<Permutation> {
        let mut g = p.clone();
        for level in &self.levels[start.min(self.levels.len())..] {
            if g.is_identity() {
                return None;
            }
            let image = g.apply(level.base);
            match &level.transversal[image - 1] {
                Some((_, uinv)) => g = g.mul(uinv),
                None => return Some(g),
            }
        }
        if g.is_identity() {
            None
        } else {
            Some(g)
        }
    }

    /// Sifts random subproducts; any residue is a missing strong generator.
    fn randomized_fill(&mut self, gens: &[Permutation]) {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cafe);
        let mut consecutive_ok = 0;
        let mut word = Permutation::identity(self.degree);
        while consecutive_ok < 16 {
            for _ in 0..(1 + rng.gen_range(0..3)) {
                let g = &gens[rng.gen_range(0..gens.len())];
                word = if rng.gen_bool(0.5) {
                    word.mul(g)
                } else {
                    word.mul(&g.inverse())
                };
            }
            match self.sift_from(0, &word) {
                Some(residue) => {
                    self.add_generator(self.level_of_residue(&residue), residue.clone());
                    consecutive_ok = 0;
                }
                None => consecutive_ok += 1,
            }
        }
    }

    fn level_of_residue(&self, residue: &Permutation) -> usize {
        for (i, level) in self.levels.iter().enumerate() {
            if residue.apply(level.base) != level.base {
                return i;
            }
        }
        self.levels.len()
    }

    /// Deterministic verification: every Schreier generator at every level
    /// must sift to the identity. Repairs and repeats on failure.
    fn verify_sweep(&mut self) {
        loop {
            let mut failed: Option<(usize, Permutation)> = None;
            'scan: for li in 0..self.levels.len() {
                let orbit = self.levels[li].orbit.clone();
                for &p in &orbit {
                    for gi in 0..self.levels[li].gens.len() {
                        let schreier = {
                            let l = &self.levels[li];
                            let (u, _) = l.transversal[p - 1].as_ref().unwrap();
                            let g = &l.gens[gi];
                            let q = g.apply(p);
                            let (_, vinv) = l.transversal[q - 1].as_ref().unwrap();
                            u.mul(g).mul(vinv)
                        };
                        if let Some(residue) = self.sift_from(li + 1, &schreier) {
                            failed = Some((li + 1, residue));
                            break 'scan;
                        }
                    }
                }
            }
            match failed {
                Some((level, residue)) => self.add_generator(level, residue),
                None => return,
            }
        }
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Returns true if the two classes were distinct.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_perm;

    fn grp(gens: &[&str], degree: usize) -> PermGroup {
        let perms: Vec<Permutation> = gens
            .iter()
            .map(|s| parse_perm(s, degree).unwrap())
            .collect();
        PermGroup::from_generators(&perms).unwrap()
    }

    pub(crate) fn symmetric(n: usize) -> PermGroup {
        if n == 1 {
            return PermGroup::identity(1);
        }
        let cycle: Vec<Point> = (1..=n).collect();
        let gens = vec![
            Permutation::from_cycles(&[vec![1, 2]], n).unwrap(),
            Permutation::from_cycles(&[cycle], n).unwrap(),
        ];
        PermGroup::from_generators(&gens).unwrap()
    }

    pub(crate) fn alternating(n: usize) -> PermGroup {
        let second = if n % 2 == 1 {
            (1..=n).collect::<Vec<_>>()
        } else {
            (2..=n).collect::<Vec<_>>()
        };
        let gens = vec![
            Permutation::from_cycles(&[vec![1, 2, 3]], n).unwrap(),
            Permutation::from_cycles(&[second], n).unwrap(),
        ];
        PermGroup::from_generators(&gens).unwrap()
    }

    #[test]
    fn orders_of_standard_groups() {
        assert_eq!(grp(&["(1,2)", "(1,2,3,4,5)"], 5).order(), 120);
        assert_eq!(grp(&["(1,2,3)", "(3,4,5)"], 5).order(), 60);
        assert_eq!(
            grp(&["()"], 5).order(),
            1,
            "identity generator gives the trivial group"
        );
        assert_eq!(symmetric(10).order(), 3_628_800);
        assert_eq!(alternating(6).order(), 360);
    }

    #[test]
    fn membership_in_a5() {
        let a5 = alternating(5);
        assert!(!a5.contains(&parse_perm("(1,2)", 5).unwrap()).unwrap());
        assert!(a5.contains(&parse_perm("(1,2,3)", 5).unwrap()).unwrap());
        let prod = a5.generators()[0].mul(&a5.generators()[1]);
        assert!(a5.contains(&prod).unwrap());
        assert!(a5
            .contains(&Permutation::identity(6))
            .is_err());
    }

    #[test]
    fn orbits() {
        let a5 = alternating(5);
        assert_eq!(a5.orbit(1).unwrap(), vec![1, 2, 3, 4, 5]);
        let g = grp(&["(1,2)(3,4)"], 4);
        assert_eq!(g.orbit(1).unwrap(), vec![1, 2]);
        let id = PermGroup::identity(5);
        assert_eq!(id.orbit(3).unwrap(), vec![3]);
        assert!(a5.orbit(6).is_err());
    }

    #[test]
    fn stabilizers() {
        let s5 = symmetric(5);
        assert_eq!(s5.stabilizer(5).unwrap().order(), 24);
        let a5 = alternating(5);
        assert_eq!(a5.stabilizer(1).unwrap().order(), 12);
        // orbit-stabilizer
        for x in 1..=5 {
            let stab = a5.stabilizer(x).unwrap();
            assert_eq!(stab.order() * a5.orbit(x).unwrap().len() as u64, 60);
        }
    }

    #[test]
    fn set_orbits() {
        let s5 = symmetric(5);
        assert_eq!(s5.set_orbit(&[1, 2, 3]).unwrap().len(), 10);
        let id = PermGroup::identity(5);
        assert_eq!(id.set_orbit(&[2, 4]).unwrap(), vec![vec![2, 4]]);
        assert!(id.set_orbit(&[]).is_err());
        assert_eq!(
            s5.set_orbit_size_bounded(&[1, 2], 3).unwrap(),
            None,
            "cap stops the sweep"
        );
    }

    #[test]
    fn coset_action_recovers_natural() {
        let s5 = symmetric(5);
        let h = s5.stabilizer(5).unwrap();
        let act = s5.coset_action(&h).unwrap();
        assert_eq!(act.image.degree(), 5);
        assert_eq!(act.image.order(), 120);
        assert!(act.labeling[0].is_identity());
    }

    #[test]
    fn coset_action_rejects_non_subgroup() {
        let a5 = alternating(5);
        let s2 = grp(&["(1,2)"], 5);
        assert!(matches!(
            a5.coset_action(&s2),
            Err(GroupError::NotSubgroup(_))
        ));
    }

    #[test]
    fn transitivity_and_primitivity() {
        assert!(alternating(5).is_transitive());
        assert!(!grp(&["(1,2)"], 3).is_transitive());
        // cyclic C4 has blocks {1,3},{2,4}
        assert!(!grp(&["(1,2,3,4)"], 4).is_primitive().unwrap());
        assert!(symmetric(5).is_primitive().unwrap());
        assert!(grp(&["(1,2)"], 3).is_primitive().is_err());
    }

    #[test]
    fn subgroup_orbit_signature() {
        let id = PermGroup::identity(5);
        let sig = PermGroup::subgroup_orbits(5, &id);
        assert_eq!(sig.pairs, vec![(1, 5)]);
        assert_eq!(sig.total(), 5);
        let g = grp(&["(1,2)(3,4)"], 6);
        let sig = PermGroup::subgroup_orbits(6, &g);
        assert_eq!(sig.pairs, vec![(1, 2), (2, 2)]);
    }

    #[test]
    fn order_invariant_under_generator_shuffle() {
        let g1 = grp(&["(1,2,3)", "(3,4,5)"], 5);
        let g2 = grp(&["(3,4,5)", "(1,2,3)"], 5);
        assert_eq!(g1.order(), g2.order());
        // replace generators by products of themselves
        let a = parse_perm("(1,2,3)", 5).unwrap();
        let b = parse_perm("(3,4,5)", 5).unwrap();
        let g3 = PermGroup::from_generators(&[a.mul(&b), b.clone(), a.mul(&b).mul(&a)]).unwrap();
        assert_eq!(g3.order(), 60);
    }

    #[test]
    fn coset_action_degree_matches_point_orbit() {
        let a5 = alternating(5);
        let stab = a5.stabilizer(2).unwrap();
        let act = a5.coset_action(&stab).unwrap();
        assert_eq!(act.image.degree(), a5.orbit(2).unwrap().len());
    }
}
