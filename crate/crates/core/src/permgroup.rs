//! Exact permutation groups on `{0..n-1}`: composition, orbits, stabilizers,
//! transitivity, induced actions and equivariant-bijection search.
//!
//! Groups are given by generators and handled by full element enumeration up
//! to a configurable bound ([`DEFAULT_BOUND`]). Every set-valued result is
//! sorted ascending so that repeated runs are byte-identical.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

/// Default element-enumeration bound. Everything in the built-in catalog has
/// order at most a few thousand.
pub const DEFAULT_BOUND: usize = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("images of length {len} do not form a bijection (value {value} repeated or out of range)")]
    NotBijective { len: usize, value: usize },
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("group enumeration exceeds bound {bound}")]
    ExceedsBound { bound: usize },
    #[error("generator {generator} does not preserve the domain (moves point {point} outside)")]
    DomainNotPreserved { generator: usize, point: usize },
    #[error("generator {generator} splits block {block}")]
    NotInvariant { generator: usize, block: usize },
    #[error("action tables are over different groups")]
    GroupMismatch,
    #[error("k = {k} exceeds domain size {domain}")]
    TupleTooLong { k: usize, domain: usize },
}

/// A permutation of `{0..degree-1}`, stored by its image sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from its image sequence, rejecting non-bijections.
    pub fn from_images(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(GroupError::NotBijective { len: n, value: x });
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of `{0..degree-1}` from disjoint cycles.
    /// Points not mentioned are fixed.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, GroupError> {
        let mut images: Vec<usize> = (0..degree).collect();
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(GroupError::PointOutOfRange { point: p, degree });
                }
                let q = cycle[(i + 1) % cycle.len()];
                images[p] = q;
            }
        }
        Permutation::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    /// Composition with the right operand applied first:
    /// `p.compose(q)` sends `x` to `p(q(x))`.
    pub fn compose(&self, q: &Permutation) -> Result<Permutation, GroupError> {
        if self.degree() != q.degree() {
            return Err(GroupError::DegreeMismatch {
                expected: self.degree(),
                found: q.degree(),
            });
        }
        Ok(Permutation {
            images: (0..self.degree()).map(|x| self.images[q.images[x]]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

/// A permutation group given by generators, with a lazily cached element list.
///
/// The cache is filled once by [`GeneratedGroup::enumerate`] and shared by all
/// later queries; elements are stored sorted by image sequence.
#[derive(Clone)]
pub struct GeneratedGroup {
    degree: usize,
    generators: Vec<Permutation>,
    cache: OnceLock<Vec<Permutation>>,
}

impl PartialEq for GeneratedGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.generators == other.generators
    }
}
impl Eq for GeneratedGroup {}

impl fmt::Debug for GeneratedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GeneratedGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .field("order", &self.cached_order())
            .finish()
    }
}

impl GeneratedGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self, GroupError> {
        for g in &generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        Ok(GeneratedGroup {
            degree,
            generators,
            cache: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        GeneratedGroup {
            degree,
            generators: Vec::new(),
            cache: OnceLock::new(),
        }
    }

    /// Symmetric group `S_n` generated by a transposition and an n-cycle.
    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::from_cycles(n, &[&[0, 1]]).unwrap());
        }
        if n >= 3 {
            let cycle: Vec<usize> = (0..n).collect();
            gens.push(Permutation::from_cycles(n, &[&cycle]).unwrap());
        }
        GeneratedGroup::new(n, gens).unwrap()
    }

    /// Cyclic group generated by the rotation `i -> i+1 (mod n)`.
    pub fn cyclic(n: usize) -> Self {
        let cycle: Vec<usize> = (0..n).collect();
        let gens = vec![Permutation::from_cycles(n, &[&cycle]).unwrap()];
        GeneratedGroup::new(n, gens).unwrap()
    }

    /// Dihedral group of order 2n acting on the n-cycle: rotation plus the
    /// reflection `i -> -i (mod n)`.
    pub fn dihedral(n: usize) -> Self {
        let cycle: Vec<usize> = (0..n).collect();
        let rot = Permutation::from_cycles(n, &[&cycle]).unwrap();
        let refl =
            Permutation::from_images((0..n).map(|i| (n - i) % n).collect()).unwrap();
        GeneratedGroup::new(n, vec![rot, refl]).unwrap()
    }

    /// Wraps a full element list as a group; used for stabilizers and kernels
    /// where the elements are already known. The cache is pre-filled.
    pub(crate) fn from_elements(degree: usize, mut elements: Vec<Permutation>) -> Self {
        elements.sort();
        elements.dedup();
        let group = GeneratedGroup {
            degree,
            generators: elements.clone(),
            cache: OnceLock::new(),
        };
        let _ = group.cache.set(elements);
        group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn cached_order(&self) -> Option<usize> {
        self.cache.get().map(|v| v.len())
    }

    /// Full element list by breadth-first closure under the generators,
    /// sorted by image sequence. Fails with `ExceedsBound` once the closure
    /// passes `bound` elements.
    pub fn enumerate(&self, bound: usize) -> Result<&[Permutation], GroupError> {
        if let Some(elems) = self.cache.get() {
            return Ok(elems);
        }
        let id = Permutation::identity(self.degree);
        let mut seen: HashSet<Permutation> = HashSet::new();
        seen.insert(id.clone());
        let mut queue: VecDeque<Permutation> = VecDeque::new();
        queue.push_back(id);
        while let Some(g) = queue.pop_front() {
            for gen in &self.generators {
                let h = gen.compose(&g).expect("degrees agree by construction");
                if !seen.contains(&h) {
                    if seen.len() >= bound {
                        return Err(GroupError::ExceedsBound { bound });
                    }
                    seen.insert(h.clone());
                    queue.push_back(h);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort();
        let _ = self.cache.set(elements);
        Ok(self.cache.get().unwrap())
    }

    pub fn order(&self, bound: usize) -> Result<usize, GroupError> {
        Ok(self.enumerate(bound)?.len())
    }

    /// The orbit of `point` under the generated group, sorted ascending.
    pub fn orbit(&self, point: usize) -> Result<Vec<usize>, GroupError> {
        if point >= self.degree {
            return Err(GroupError::PointOutOfRange {
                point,
                degree: self.degree,
            });
        }
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut queue = vec![point];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    queue.push(y);
                }
            }
        }
        queue.sort_unstable();
        Ok(queue)
    }

    /// Orbit of an ordered tuple under the coordinatewise action.
    pub fn orbit_of_tuple(&self, tuple: &[usize]) -> Vec<Vec<usize>> {
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        seen.insert(tuple.to_vec());
        let mut queue: VecDeque<Vec<usize>> = VecDeque::new();
        queue.push_back(tuple.to_vec());
        while let Some(t) = queue.pop_front() {
            for g in &self.generators {
                let image: Vec<usize> = t.iter().map(|&x| g.apply(x)).collect();
                if !seen.contains(&image) {
                    seen.insert(image.clone());
                    queue.push_back(image);
                }
            }
        }
        let mut orbit: Vec<Vec<usize>> = seen.into_iter().collect();
        orbit.sort();
        orbit
    }

    /// Whether the group is k-transitive on `domain` (a G-invariant subset of
    /// the permutation domain). `k = 0` is vacuously true.
    pub fn is_k_transitive(&self, domain: &[usize], k: usize) -> Result<bool, GroupError> {
        let domain_set: HashSet<usize> = domain.iter().copied().collect();
        for (gi, g) in self.generators.iter().enumerate() {
            for &x in domain {
                if x >= self.degree {
                    return Err(GroupError::PointOutOfRange {
                        point: x,
                        degree: self.degree,
                    });
                }
                if !domain_set.contains(&g.apply(x)) {
                    return Err(GroupError::DomainNotPreserved {
                        generator: gi,
                        point: x,
                    });
                }
            }
        }
        if k == 0 {
            return Ok(true);
        }
        if k > domain.len() {
            return Err(GroupError::TupleTooLong {
                k,
                domain: domain.len(),
            });
        }
        // Count ordered k-tuples of distinct domain points.
        let mut total: usize = 1;
        for i in 0..k {
            total *= domain.len() - i;
        }
        let seed: Vec<usize> = domain.iter().take(k).copied().collect();
        // The seed must consist of distinct points; `domain` is a set.
        Ok(self.orbit_of_tuple(&seed).len() == total)
    }

    /// Subgroup of elements fixing the target, computed by filtering the full
    /// element list. Returned with its element list as generators.
    pub fn stabilizer(&self, target: &StabilizerMode, bound: usize) -> Result<GeneratedGroup, GroupError> {
        let elements = self.enumerate(bound)?;
        let keep: Vec<Permutation> = match target {
            StabilizerMode::Point(p) => {
                if *p >= self.degree {
                    return Err(GroupError::PointOutOfRange {
                        point: *p,
                        degree: self.degree,
                    });
                }
                elements.iter().filter(|g| g.apply(*p) == *p).cloned().collect()
            }
            StabilizerMode::Setwise(set) => {
                let s: HashSet<usize> = set.iter().copied().collect();
                elements
                    .iter()
                    .filter(|g| set.iter().all(|&x| s.contains(&g.apply(x))))
                    .cloned()
                    .collect()
            }
            StabilizerMode::Pointwise(set) => elements
                .iter()
                .filter(|g| set.iter().all(|&x| g.apply(x) == x))
                .cloned()
                .collect(),
        };
        Ok(GeneratedGroup::from_elements(self.degree, keep))
    }

    /// Quotient action on a block partition: returns the action table on
    /// block indices together with the kernel (elements fixing every block
    /// setwise).
    pub fn induced_on_blocks(
        &self,
        blocks: &[Vec<usize>],
        bound: usize,
    ) -> Result<(ActionTable, GeneratedGroup), GroupError> {
        let block_of = block_index_map(self.degree, blocks)?;
        let mut rows = Vec::with_capacity(self.generators.len());
        for (gi, g) in self.generators.iter().enumerate() {
            rows.push(block_image(g, blocks, &block_of, gi)?);
        }
        let table = ActionTable {
            group: self.clone(),
            domain_size: blocks.len(),
            rows,
        };
        let mut kernel = Vec::new();
        for g in self.enumerate(bound)? {
            let row = block_image(g, blocks, &block_of, usize::MAX)?;
            if row.iter().enumerate().all(|(i, &x)| i == x) {
                kernel.push(g.clone());
            }
        }
        Ok((table, GeneratedGroup::from_elements(self.degree, kernel)))
    }

    /// Induced generators on an ordered list of tuples closed under the
    /// coordinatewise action (arcs, 2-paths, 3-arcs of a graph).
    pub fn induced_on_tuples(&self, tuples: &[Vec<usize>]) -> Result<GeneratedGroup, GroupError> {
        let index: HashMap<&[usize], usize> =
            tuples.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect();
        let mut gens = Vec::with_capacity(self.generators.len());
        for (gi, g) in self.generators.iter().enumerate() {
            let mut images = Vec::with_capacity(tuples.len());
            for t in tuples {
                let image: Vec<usize> = t.iter().map(|&x| g.apply(x)).collect();
                match index.get(image.as_slice()) {
                    Some(&j) => images.push(j),
                    None => {
                        return Err(GroupError::DomainNotPreserved {
                            generator: gi,
                            point: t[0],
                        })
                    }
                }
            }
            gens.push(Permutation::from_images(images)?);
        }
        GeneratedGroup::new(tuples.len(), gens)
    }

    /// Number of distinct restrictions of the group elements to an invariant
    /// subset: the order of the faithful image of the action on that subset.
    pub fn image_order_on(&self, domain: &[usize], bound: usize) -> Result<usize, GroupError> {
        let elements = self.enumerate(bound)?;
        let mut images: HashSet<Vec<usize>> = HashSet::new();
        for g in elements {
            images.insert(domain.iter().map(|&x| g.apply(x)).collect());
        }
        Ok(images.len())
    }

    /// Simplicity probe by normal closures: the group is simple iff the
    /// normal closure of every non-identity conjugacy class is the whole
    /// group. Only run for orders up to `cap`; returns `None` when skipped.
    pub fn is_simple_by_closure(&self, bound: usize, cap: usize) -> Result<Option<bool>, GroupError> {
        let elements = self.enumerate(bound)?;
        let n = elements.len();
        if n > cap {
            return Ok(None);
        }
        if n == 1 {
            return Ok(Some(false));
        }
        // Partition into conjugacy classes; one closure per class suffices.
        let mut classified: HashSet<Permutation> = HashSet::new();
        let mut classes: Vec<Vec<Permutation>> = Vec::new();
        for g in elements {
            if g.is_identity() || classified.contains(g) {
                continue;
            }
            let mut class: Vec<Permutation> = Vec::new();
            for h in elements {
                let conj = h.inverse().compose(&g.compose(h)?)?;
                if classified.insert(conj.clone()) {
                    class.push(conj);
                }
            }
            classes.push(class);
        }
        for class in &classes {
            // Subgroup generated by the class, by BFS from the identity.
            let mut seen: HashSet<Permutation> = HashSet::new();
            let id = Permutation::identity(self.degree);
            seen.insert(id.clone());
            let mut queue: VecDeque<Permutation> = VecDeque::new();
            queue.push_back(id);
            while let Some(a) = queue.pop_front() {
                if seen.len() == n {
                    break;
                }
                for c in class {
                    let ac = c.compose(&a)?;
                    if seen.insert(ac.clone()) {
                        queue.push_back(ac);
                    }
                }
            }
            if seen.len() != n {
                return Ok(Some(false));
            }
        }
        Ok(Some(true))
    }
}

/// Stabilizer request: a fixed point, a setwise-fixed set, or a pointwise-fixed set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StabilizerMode {
    Point(usize),
    Setwise(Vec<usize>),
    Pointwise(Vec<usize>),
}

fn block_index_map(degree: usize, blocks: &[Vec<usize>]) -> Result<Vec<usize>, GroupError> {
    let mut block_of = vec![usize::MAX; degree];
    for (bi, block) in blocks.iter().enumerate() {
        for &x in block {
            if x >= degree {
                return Err(GroupError::PointOutOfRange { point: x, degree });
            }
            block_of[x] = bi;
        }
    }
    Ok(block_of)
}

fn block_image(
    g: &Permutation,
    blocks: &[Vec<usize>],
    block_of: &[usize],
    generator: usize,
) -> Result<Vec<usize>, GroupError> {
    let mut row = Vec::with_capacity(blocks.len());
    for (bi, block) in blocks.iter().enumerate() {
        let target = block_of[g.apply(block[0])];
        if target == usize::MAX {
            // Image leaves the covered part of the domain.
            return Err(GroupError::NotInvariant {
                generator,
                block: bi,
            });
        }
        for &x in block {
            if block_of[g.apply(x)] != target {
                return Err(GroupError::NotInvariant {
                    generator,
                    block: bi,
                });
            }
        }
        if blocks[target].len() != block.len() {
            return Err(GroupError::NotInvariant {
                generator,
                block: bi,
            });
        }
        row.push(target);
    }
    Ok(row)
}

/// One action of a [`GeneratedGroup`] on a finite domain: row `i` is the
/// permutation of the domain induced by generator `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionTable {
    group: GeneratedGroup,
    domain_size: usize,
    rows: Vec<Vec<usize>>,
}

impl ActionTable {
    /// The natural action of the group on its permutation domain.
    pub fn natural(group: &GeneratedGroup) -> Self {
        let rows = group
            .generators()
            .iter()
            .map(|g| g.images().to_vec())
            .collect();
        ActionTable {
            group: group.clone(),
            domain_size: group.degree(),
            rows,
        }
    }

    /// Restriction of the action to an invariant subset, relabelled by the
    /// subset's sorted order.
    pub fn on_invariant_subset(group: &GeneratedGroup, subset: &[usize]) -> Result<Self, GroupError> {
        let mut sorted = subset.to_vec();
        sorted.sort_unstable();
        let pos: HashMap<usize, usize> = sorted.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let mut rows = Vec::with_capacity(group.generators().len());
        for (gi, g) in group.generators().iter().enumerate() {
            let mut row = Vec::with_capacity(sorted.len());
            for &x in &sorted {
                match pos.get(&g.apply(x)) {
                    Some(&j) => row.push(j),
                    None => {
                        return Err(GroupError::DomainNotPreserved {
                            generator: gi,
                            point: x,
                        })
                    }
                }
            }
            rows.push(row);
        }
        Ok(ActionTable {
            group: group.clone(),
            domain_size: sorted.len(),
            rows,
        })
    }

    pub fn from_rows(group: &GeneratedGroup, domain_size: usize, rows: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        if rows.len() != group.generators().len() {
            return Err(GroupError::GroupMismatch);
        }
        for row in &rows {
            Permutation::from_images(row.clone())?;
            if row.len() != domain_size {
                return Err(GroupError::DegreeMismatch {
                    expected: domain_size,
                    found: row.len(),
                });
            }
        }
        Ok(ActionTable {
            group: group.clone(),
            domain_size,
            rows,
        })
    }

    pub fn domain_size(&self) -> usize {
        self.domain_size
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn group(&self) -> &GeneratedGroup {
        &self.group
    }

    /// The abstract group generated by the induced generator images.
    pub fn induced_group(&self) -> GeneratedGroup {
        let gens = self
            .rows
            .iter()
            .map(|r| Permutation::from_images(r.clone()).expect("rows are bijections"))
            .collect();
        GeneratedGroup::new(self.domain_size, gens).expect("degrees agree")
    }
}

/// Searches for a bijection `rho` between the domains of two actions of the
/// same group with `rho(x·g) = rho(x)·g` for every generator `g`, by scanning
/// the orbits of the diagonal action on pairs. Returns `None` when the domain
/// sizes differ or no orbit is the graph of a bijection.
pub fn equivariant_bijection(
    act1: &ActionTable,
    act2: &ActionTable,
) -> Result<Option<Vec<usize>>, GroupError> {
    if act1.group != act2.group {
        return Err(GroupError::GroupMismatch);
    }
    let n = act1.domain_size;
    if n != act2.domain_size {
        return Ok(None);
    }
    let mut visited = vec![false; n * n];
    for seed_x in 0..n {
        for seed_y in 0..n {
            if visited[seed_x * n + seed_y] {
                continue;
            }
            // Orbit of (seed_x, seed_y) under the diagonal action.
            let mut orbit = vec![(seed_x, seed_y)];
            visited[seed_x * n + seed_y] = true;
            let mut head = 0;
            while head < orbit.len() {
                let (x, y) = orbit[head];
                head += 1;
                for (r1, r2) in act1.rows.iter().zip(&act2.rows) {
                    let (ix, iy) = (r1[x], r2[y]);
                    if !visited[ix * n + iy] {
                        visited[ix * n + iy] = true;
                        orbit.push((ix, iy));
                    }
                }
            }
            if orbit.len() != n {
                continue;
            }
            let mut rho = vec![usize::MAX; n];
            let mut hit = vec![false; n];
            let mut ok = true;
            for &(x, y) in &orbit {
                if rho[x] != usize::MAX || hit[y] {
                    ok = false;
                    break;
                }
                rho[x] = y;
                hit[y] = true;
            }
            if ok {
                return Ok(Some(rho));
            }
        }
    }
    Ok(None)
}
