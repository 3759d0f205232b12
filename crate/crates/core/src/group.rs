//! Finite permutation groups and their conjugacy classes of subgroups.

use serde::{Deserialize, Serialize};
use std::collections::{HashMap, VecDeque};
use std::fmt;

pub const DEFAULT_GROUP_CAP: usize = 360;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("InvalidPermutation: {0:?} is not a bijection of 0..{len}", len = .0.len())]
    InvalidPermutation(Vec<usize>),
    #[error("DegreeMismatch: generator of degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("ClosureExceedsCap: group order exceeds cap {cap}")]
    ClosureExceedsCap { cap: usize },
    #[error("NotASubgroup: {0}")]
    NotASubgroup(String),
}

/// A bijection of `{0, …, n−1}` stored by its images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.0)
    }
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(GroupError::InvalidPermutation(images));
            }
            seen[i] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Product of disjoint or overlapping cycles, applied right to left.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self, GroupError> {
        let mut p = Self::identity(n);
        for c in cycles {
            let mut images: Vec<usize> = (0..n).collect();
            for (k, &a) in c.iter().enumerate() {
                if a >= n {
                    return Err(GroupError::InvalidPermutation(c.to_vec()));
                }
                images[a] = c[(k + 1) % c.len()];
            }
            p = Permutation::new(images)?.compose(&p);
        }
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }
}

/// Fixed-width bit set over element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Bits(Vec<u64>);

impl Bits {
    pub(crate) fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }
    pub(crate) fn insert(&mut self, i: usize) -> bool {
        let (w, b) = (i / 64, i % 64);
        let had = self.0[w] >> b & 1 == 1;
        self.0[w] |= 1 << b;
        !had
    }
    pub(crate) fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    pub(crate) fn is_subset(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
    pub(crate) fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            (0..64).filter(move |b| word >> b & 1 == 1).map(move |b| w * 64 + b)
        })
    }
    pub(crate) fn from_indices(n: usize, idx: &[usize]) -> Self {
        let mut b = Bits::new(n);
        for &i in idx {
            b.insert(i);
        }
        b
    }
}

/// A finite group of permutations with its full multiplication table.
#[derive(Clone)]
pub struct FiniteGroup {
    degree: usize,
    elements: Vec<Permutation>,
    generators: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    mult: Vec<u32>,
    inv: Vec<usize>,
    /// For each non-identity element, `(parent, generator)` with
    /// `element = generators[generator] ∘ elements[parent]`.
    parent: Vec<Option<(usize, usize)>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree)
            .field("order", &self.elements.len())
            .field("generators", &self.generators)
            .finish()
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

/// Closure of `generators` (all of degree `degree`) under composition,
/// breadth-first from the identity with generators tried in input order.
pub fn generate_group(degree: usize, generators: &[Permutation], cap: usize) -> Result<FiniteGroup, GroupError> {
    for g in generators {
        if g.degree() != degree {
            return Err(GroupError::DegreeMismatch { expected: degree, found: g.degree() });
        }
    }
    let id = Permutation::identity(degree);
    let mut elements = vec![id.clone()];
    let mut index = HashMap::from([(id, 0usize)]);
    let mut parent = vec![None];
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (s, g) in generators.iter().enumerate() {
            let y = g.compose(&elements[x]);
            if index.contains_key(&y) {
                continue;
            }
            if elements.len() == cap {
                return Err(GroupError::ClosureExceedsCap { cap });
            }
            index.insert(y.clone(), elements.len());
            queue.push_back(elements.len());
            elements.push(y);
            parent.push(Some((x, s)));
        }
    }
    let n = elements.len();
    let mut mult = vec![0u32; n * n];
    for i in 0..n {
        for j in 0..n {
            mult[i * n + j] = index[&elements[i].compose(&elements[j])] as u32;
        }
    }
    let inv = elements.iter().map(|e| index[&e.inverse()]).collect();
    Ok(FiniteGroup { degree, elements, generators: generators.to_vec(), index, mult, inv, parent })
}

/// Parses raw image lists and generates the group.
pub fn group_from_images(degree: usize, generators: &[Vec<usize>], cap: usize) -> Result<FiniteGroup, GroupError> {
    let gens = generators.iter().map(|g| Permutation::new(g.clone())).collect::<Result<Vec<_>, _>>()?;
    generate_group(degree, &gens, cap)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupJson {
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Indices of the generators in the element list.
    pub fn generator_indices(&self) -> Vec<usize> {
        self.generators.iter().map(|g| self.index[g]).collect()
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn identity_index(&self) -> usize {
        0
    }

    /// Index of `elements[a] ∘ elements[b]`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order() + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// Index of `g·x·g⁻¹`.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// Breadth-first word data: `(parent, generator)` for each element.
    pub fn bfs_parent(&self, i: usize) -> Option<(usize, usize)> {
        self.parent[i]
    }

    pub fn to_json(&self) -> GroupJson {
        GroupJson { degree: self.degree, generators: self.generators.iter().map(|g| g.images().to_vec()).collect() }
    }

    pub fn from_json(j: &GroupJson, cap: usize) -> Result<Self, GroupError> {
        group_from_images(j.degree, &j.generators, cap)
    }

    pub(crate) fn closure_bits(&self, gens: &[usize]) -> Bits {
        let mut bits = Bits::new(self.order());
        bits.insert(0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &s in gens {
                let y = self.mul(s, x);
                if bits.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        bits
    }

    /// The subgroup generated by the given element indices.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Subgroup {
        Subgroup::from_bits(&self.closure_bits(gens))
    }

    /// Validates that `members` (element indices) form a subgroup.
    pub fn subgroup_from_members(&self, members: &[usize]) -> Result<Subgroup, GroupError> {
        let n = self.order();
        if members.iter().any(|&m| m >= n) {
            return Err(GroupError::NotASubgroup("element index out of range".into()));
        }
        let bits = Bits::from_indices(n, members);
        self.check_subgroup_bits(&bits)?;
        Ok(Subgroup::from_bits(&bits))
    }

    /// The subgroup generated by permutations that must lie in this group.
    pub fn subgroup_from_permutations(&self, perms: &[Permutation]) -> Result<Subgroup, GroupError> {
        let idx = perms
            .iter()
            .map(|p| {
                self.index_of(p).ok_or_else(|| GroupError::NotASubgroup(format!("{p:?} is not an element of the group")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.subgroup_generated(&idx))
    }

    fn check_subgroup_bits(&self, bits: &Bits) -> Result<(), GroupError> {
        if !bits.contains(0) {
            return Err(GroupError::NotASubgroup("identity missing".into()));
        }
        let members: Vec<usize> = bits.iter().collect();
        for &a in &members {
            for &b in &members {
                if !bits.contains(self.mul(a, b)) {
                    return Err(GroupError::NotASubgroup("not closed under composition".into()));
                }
            }
        }
        if !self.order().is_multiple_of(members.len()) {
            return Err(GroupError::NotASubgroup("order does not divide the group order".into()));
        }
        Ok(())
    }

    pub fn check_subgroup(&self, h: &Subgroup) -> Result<(), GroupError> {
        if h.members.iter().any(|&m| m >= self.order()) {
            return Err(GroupError::NotASubgroup("element index out of range".into()));
        }
        self.check_subgroup_bits(&h.bits(self.order()))
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup { members: (0..self.order()).collect() }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup { members: vec![0] }
    }

    pub(crate) fn conjugate_bits(&self, g: usize, h: &Bits) -> Bits {
        let mut out = Bits::new(self.order());
        for x in h.iter() {
            out.insert(self.conjugate(g, x));
        }
        out
    }

    /// `{g : gHg⁻¹ = H}`, by conjugating over every element.
    pub fn normalizer(&self, h: &Subgroup) -> Result<Subgroup, GroupError> {
        self.check_subgroup(h)?;
        let bits = h.bits(self.order());
        let members: Vec<usize> = (0..self.order()).filter(|&g| self.conjugate_bits(g, &bits) == bits).collect();
        Ok(Subgroup { members })
    }

    /// Greedy generating set of `h` taken in member order.
    pub fn generating_set(&self, h: &Subgroup) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.closure_bits(&gens);
        for &m in &h.members {
            if !span.contains(m) {
                gens.push(m);
                span = self.closure_bits(&gens);
            }
        }
        gens
    }

    /// Realizes `h` as a group in its own right, with its class table.
    pub fn embed(&self, h: &Subgroup) -> Result<SubgroupEmbedding, GroupError> {
        self.check_subgroup(h)?;
        let gens: Vec<Permutation> = self.generating_set(h).iter().map(|&i| self.elements[i].clone()).collect();
        let group = generate_group(self.degree, &gens, self.order())?;
        let to_parent: Vec<usize> = group.elements.iter().map(|p| self.index[p]).collect();
        let from_parent = to_parent.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let table = subgroup_classes(&group);
        Ok(SubgroupEmbedding { subgroup: h.clone(), group, table, to_parent, from_parent })
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(x, y);
            k += 1;
        }
        k
    }
}

/// Subgroup of a fixed parent group, as a sorted list of element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Subgroup {
    pub(crate) fn from_bits(b: &Bits) -> Self {
        Subgroup { members: b.iter().collect() }
    }

    pub(crate) fn bits(&self, n: usize) -> Bits {
        Bits::from_indices(n, &self.members)
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }
}

#[derive(Debug, Clone)]
pub struct SubgroupClass {
    pub representative: Subgroup,
    pub class_size: usize,
    pub normalizer_order: usize,
    pub weyl_order: usize,
    conjugates: Vec<Bits>,
}

impl SubgroupClass {
    pub fn order(&self) -> usize {
        self.representative.order()
    }

    /// Every subgroup in the class.
    pub fn conjugates(&self) -> Vec<Subgroup> {
        self.conjugates.iter().map(Subgroup::from_bits).collect()
    }
}

/// Conjugacy classes of subgroups, sorted by order then by the
/// lexicographically least member list (which is the representative).
#[derive(Debug, Clone)]
pub struct SubgroupClassTable {
    group_order: usize,
    classes: Vec<SubgroupClass>,
    subconjugacy: Vec<Vec<bool>>,
    lookup: HashMap<Bits, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassJson {
    pub order: usize,
    pub class_size: usize,
    pub normalizer_order: usize,
    pub weyl_order: usize,
    pub representative: Vec<usize>,
}

impl SubgroupClassTable {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &SubgroupClass {
        &self.classes[i]
    }

    pub fn representative(&self, i: usize) -> &Subgroup {
        &self.classes[i].representative
    }

    pub fn subconjugacy(&self) -> &[Vec<bool>] {
        &self.subconjugacy
    }

    /// Total number of subgroups.
    pub fn subgroup_count(&self) -> usize {
        self.classes.iter().map(|c| c.class_size).sum()
    }

    /// Class index of an arbitrary subgroup.
    pub fn class_of(&self, h: &Subgroup) -> Option<usize> {
        self.lookup.get(&h.bits(self.group_order)).copied()
    }

    /// Index of the class of the whole group (always last).
    pub fn top(&self) -> usize {
        self.classes.len() - 1
    }

    /// Label such as `"(6)#3"`: subgroup order and class index.
    pub fn label(&self, i: usize) -> String {
        format!("({})#{}", self.classes[i].order(), i)
    }

    pub fn to_json(&self) -> Vec<ClassJson> {
        self.classes
            .iter()
            .map(|c| ClassJson {
                order: c.order(),
                class_size: c.class_size,
                normalizer_order: c.normalizer_order,
                weyl_order: c.weyl_order,
                representative: c.representative.members.clone(),
            })
            .collect()
    }
}

/// True iff some conjugate of representative `i` lies in representative `j`.
pub fn is_subconjugate(t: &SubgroupClassTable, i: usize, j: usize) -> bool {
    t.subconjugacy[i][j]
}

/// Exhaustive enumeration by cyclic extension: every class representative
/// is extended by one element from each of its cosets, and each new
/// subgroup is registered together with all its conjugates.
pub fn subgroup_classes(g: &FiniteGroup) -> SubgroupClassTable {
    let n = g.order();
    let mut lookup: HashMap<Bits, usize> = HashMap::new();
    // (representative bits, generators, conjugates)
    let mut found: Vec<(Bits, Vec<usize>, Vec<Bits>)> = Vec::new();

    let register = |bits: Bits, gens: Vec<usize>, lookup: &mut HashMap<Bits, usize>, found: &mut Vec<_>| {
        let id = found.len();
        let mut conj: Vec<Bits> = Vec::new();
        for x in 0..n {
            let c = g.conjugate_bits(x, &bits);
            if !lookup.contains_key(&c) {
                lookup.insert(c.clone(), id);
                conj.push(c);
            }
        }
        found.push((bits, gens, conj));
    };

    register(g.closure_bits(&[]), Vec::new(), &mut lookup, &mut found);
    let mut next = 0;
    while next < found.len() {
        let (hbits, hgens) = (found[next].0.clone(), found[next].1.clone());
        next += 1;
        let mut covered = hbits.clone();
        for x in 0..n {
            if covered.contains(x) {
                continue;
            }
            for h in hbits.iter() {
                covered.insert(g.mul(x, h));
            }
            let mut gens = hgens.clone();
            gens.push(x);
            let k = g.closure_bits(&gens);
            if !lookup.contains_key(&k) {
                register(k, gens, &mut lookup, &mut found);
            }
        }
    }

    // canonical representative: least member list among conjugates
    let mut classes: Vec<(usize, Vec<usize>, Vec<Bits>)> = found
        .into_iter()
        .map(|(_, _, conj)| {
            let rep = conj.iter().map(|b| b.iter().collect::<Vec<_>>()).min().expect("nonempty class");
            (rep.len(), rep, conj)
        })
        .collect();
    classes.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    let classes: Vec<SubgroupClass> = classes
        .into_iter()
        .map(|(order, rep, conj)| {
            let class_size = conj.len();
            let normalizer_order = n / class_size;
            SubgroupClass {
                representative: Subgroup { members: rep },
                class_size,
                normalizer_order,
                weyl_order: normalizer_order / order,
                conjugates: conj,
            }
        })
        .collect();
    let mut lookup = HashMap::new();
    for (i, c) in classes.iter().enumerate() {
        for b in &c.conjugates {
            lookup.insert(b.clone(), i);
        }
    }
    let k = classes.len();
    let rep_bits: Vec<Bits> = classes.iter().map(|c| c.representative.bits(n)).collect();
    let subconjugacy = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    classes[j].order().is_multiple_of(classes[i].order())
                        && classes[i].conjugates.iter().any(|c| c.is_subset(&rep_bits[j]))
                })
                .collect()
        })
        .collect();
    SubgroupClassTable { group_order: n, classes, subconjugacy, lookup }
}

/// A subgroup `H ≤ G` realized as a permutation group with its own class
/// table and index translation to and from `G`.
#[derive(Debug, Clone)]
pub struct SubgroupEmbedding {
    pub subgroup: Subgroup,
    pub group: FiniteGroup,
    pub table: SubgroupClassTable,
    to_parent: Vec<usize>,
    from_parent: HashMap<usize, usize>,
}

impl SubgroupEmbedding {
    pub fn to_parent(&self, i: usize) -> usize {
        self.to_parent[i]
    }

    pub fn from_parent(&self, i: usize) -> Option<usize> {
        self.from_parent.get(&i).copied()
    }

    /// A subgroup of `H` (in `H`'s numbering) as a subgroup of `G`.
    pub fn lift(&self, k: &Subgroup) -> Subgroup {
        let mut m: Vec<usize> = k.members().iter().map(|&i| self.to_parent[i]).collect();
        m.sort_unstable();
        Subgroup { members: m }
    }

    /// A subgroup of `G` contained in `H`, renumbered into `H`.
    pub fn restrict(&self, k: &Subgroup) -> Option<Subgroup> {
        let mut m = k.members().iter().map(|&i| self.from_parent(i)).collect::<Option<Vec<_>>>()?;
        m.sort_unstable();
        Some(Subgroup { members: m })
    }
}

/// Decomposes the `H`-set `G/K` into orbits recorded by the class (in `H`'s
/// table) of their stabilizers, with multiplicities; sorted by class index.
pub fn orbit_decomposition(
    g: &FiniteGroup,
    h: &SubgroupEmbedding,
    k: &Subgroup,
) -> Result<Vec<(usize, usize)>, GroupError> {
    g.check_subgroup(k)?;
    let n = g.order();
    // left cosets xK
    let mut coset = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if coset[x] != usize::MAX {
            continue;
        }
        for &km in k.members() {
            coset[g.mul(x, km)] = reps.len();
        }
        reps.push(x);
    }
    let hm: Vec<usize> = (0..h.group.order()).map(|i| h.to_parent(i)).collect();
    let mut seen = vec![false; reps.len()];
    let mut counts: HashMap<usize, usize> = HashMap::new();
    for c in 0..reps.len() {
        if seen[c] {
            continue;
        }
        let mut queue = VecDeque::from([c]);
        seen[c] = true;
        while let Some(d) = queue.pop_front() {
            for &y in &hm {
                let e = coset[g.mul(y, reps[d])];
                if !seen[e] {
                    seen[e] = true;
                    queue.push_back(e);
                }
            }
        }
        let x = reps[c];
        let xinv = g.inv(x);
        let stab: Vec<usize> = (0..h.group.order())
            .filter(|&i| k.contains(g.mul(g.mul(xinv, hm[i]), x)))
            .collect();
        let stab = Subgroup::from_bits(&Bits::from_indices(h.group.order(), &stab));
        let cls = h.table.class_of(&stab).expect("stabilizer is a subgroup of H");
        *counts.entry(cls).or_insert(0) += 1;
    }
    let mut out: Vec<(usize, usize)> = counts.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}

/// Small permutation groups used as fixtures and catalog entries.
pub mod library {
    use super::*;

    fn gen(n: usize, cycles: &[&[&[usize]]]) -> FiniteGroup {
        let gens: Vec<Permutation> =
            cycles.iter().map(|c| Permutation::from_cycles(n, c).expect("valid cycles")).collect();
        generate_group(n, &gens, DEFAULT_GROUP_CAP).expect("library group within cap")
    }

    pub fn trivial() -> FiniteGroup {
        gen(1, &[])
    }

    pub fn cyclic(n: usize) -> FiniteGroup {
        let c: Vec<usize> = (0..n).collect();
        gen(n, &[&[&c]])
    }

    pub fn dihedral(n: usize) -> FiniteGroup {
        let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let refl: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
        generate_group(n, &[Permutation::new(rot).unwrap(), Permutation::new(refl).unwrap()], DEFAULT_GROUP_CAP)
            .expect("dihedral")
    }

    pub fn symmetric(n: usize) -> FiniteGroup {
        let c: Vec<usize> = (0..n).collect();
        gen(n, &[&[&[0, 1]], &[&c]])
    }

    pub fn alternating4() -> FiniteGroup {
        gen(4, &[&[&[0, 1, 2]], &[&[0, 1], &[2, 3]]])
    }

    pub fn klein_four() -> FiniteGroup {
        gen(4, &[&[&[0, 1], &[2, 3]], &[&[0, 2], &[1, 3]]])
    }

    pub fn quaternion8() -> FiniteGroup {
        gen(8, &[&[&[0, 1, 3, 6], &[2, 5, 7, 4]], &[&[0, 2, 3, 7], &[1, 4, 6, 5]]])
    }

    /// Named fixtures; `None` for unknown names.
    pub fn by_name(name: &str) -> Option<FiniteGroup> {
        let g = match name {
            "C1" | "1" => trivial(),
            "V4" => klein_four(),
            "Q8" => quaternion8(),
            "A4" => alternating4(),
            "S3" => symmetric(3),
            "S4" => symmetric(4),
            _ => {
                let (kind, rest) = name.split_at(1.min(name.len()));
                let k: usize = rest.parse().ok().filter(|&k| k >= 1)?;
                match kind {
                    "C" => cyclic(k),
                    "D" if k >= 3 => dihedral(k),
                    _ => return None,
                }
            }
        };
        Some(g)
    }

    /// Groups of order at most 24 given by at most three generators.
    pub fn corpus() -> Vec<(&'static str, FiniteGroup)> {
        vec![
            ("C1", trivial()),
            ("C2", cyclic(2)),
            ("C3", cyclic(3)),
            ("C4", cyclic(4)),
            ("V4", klein_four()),
            ("C5", cyclic(5)),
            ("C6", cyclic(6)),
            ("S3", symmetric(3)),
            ("C7", cyclic(7)),
            ("C8", cyclic(8)),
            ("C2xC4", gen(6, &[&[&[0, 1]], &[&[2, 3, 4, 5]]])),
            ("C2^3", gen(6, &[&[&[0, 1]], &[&[2, 3]], &[&[4, 5]]])),
            ("D4", dihedral(4)),
            ("Q8", quaternion8()),
            ("C3xC3", gen(6, &[&[&[0, 1, 2]], &[&[3, 4, 5]]])),
            ("D5", dihedral(5)),
            ("A4", alternating4()),
            ("D6", dihedral(6)),
            ("C2xS3", gen(5, &[&[&[0, 1]], &[&[0, 1, 2]], &[&[3, 4]]])),
            ("C12", cyclic(12)),
            ("S4", symmetric(4)),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::library::*;
    use super::*;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn generate_examples() {
        assert_eq!(generate_group(3, &[], 10).unwrap().order(), 1);
        let s3 = generate_group(3, &[perm(&[1, 0, 2]), perm(&[1, 2, 0])], 360).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(
            generate_group(2, &[perm(&[1, 0])], 1).unwrap_err(),
            GroupError::ClosureExceedsCap { cap: 1 }
        );
        assert!(matches!(Permutation::new(vec![0, 0]), Err(GroupError::InvalidPermutation(_))));
        assert!(matches!(generate_group(3, &[perm(&[1, 0])], 9), Err(GroupError::DegreeMismatch { .. })));
    }

    #[test]
    fn bfs_order_is_deterministic() {
        let a = symmetric(3);
        let b = symmetric(3);
        assert_eq!(a.elements(), b.elements());
        assert!(a.element(0).is_identity());
        for i in 1..a.order() {
            let (p, s) = a.bfs_parent(i).unwrap();
            assert_eq!(a.generators()[s].compose(a.element(p)), *a.element(i));
        }
    }

    #[test]
    fn class_tables() {
        assert_eq!(subgroup_classes(&trivial()).len(), 1);
        let t = subgroup_classes(&symmetric(3));
        let orders: Vec<usize> = t.classes().iter().map(|c| c.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
        assert_eq!(t.class(1).class_size, 3);
        let c2 = subgroup_classes(&cyclic(2));
        assert_eq!(c2.len(), 2);
        assert_eq!(c2.class(0).weyl_order, 2);
    }

    #[test]
    fn normalizer_examples() {
        let g = symmetric(3);
        assert_eq!(g.normalizer(&g.whole()).unwrap(), g.whole());
        let swap = g.index_of(&perm(&[1, 0, 2])).unwrap();
        let h = g.subgroup_generated(&[swap]);
        assert_eq!(g.normalizer(&h).unwrap(), h);
        let rot = g.index_of(&perm(&[1, 2, 0])).unwrap();
        let c3 = g.subgroup_generated(&[rot]);
        assert_eq!(g.normalizer(&c3).unwrap().order(), 6);
        let bogus = Subgroup { members: vec![0, swap, rot] };
        assert!(matches!(g.normalizer(&bogus), Err(GroupError::NotASubgroup(_))));
    }

    #[test]
    fn subconjugacy_examples() {
        let t = subgroup_classes(&symmetric(3));
        for j in 0..4 {
            assert!(is_subconjugate(&t, 0, j));
        }
        assert!(!is_subconjugate(&t, 1, 2));
        assert!(is_subconjugate(&t, 2, 3));
    }

    #[test]
    fn orbit_decomposition_examples() {
        let g = symmetric(3);
        let whole = g.embed(&g.whole()).unwrap();
        assert_eq!(orbit_decomposition(&g, &whole, &g.whole()).unwrap(), vec![(whole.table.top(), 1)]);

        let c2 = cyclic(2);
        let triv = c2.embed(&c2.trivial_subgroup()).unwrap();
        assert_eq!(orbit_decomposition(&c2, &triv, &c2.trivial_subgroup()).unwrap(), vec![(0, 2)]);

        let swap = g.index_of(&perm(&[1, 0, 2])).unwrap();
        let h = g.subgroup_generated(&[swap]);
        let emb = g.embed(&h).unwrap();
        assert_eq!(orbit_decomposition(&g, &emb, &h).unwrap(), vec![(0, 1), (1, 1)]);
    }

    #[test]
    fn corpus_orders() {
        let orders: Vec<usize> = corpus().iter().map(|(_, g)| g.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 4, 4, 5, 6, 6, 7, 8, 8, 8, 8, 8, 9, 10, 12, 12, 12, 12, 24]);
        let q8 = quaternion8();
        assert!(!q8.is_abelian());
        let involutions = (1..8).filter(|&x| q8.element_order(x) == 2).count();
        assert_eq!(involutions, 1);
    }
}
