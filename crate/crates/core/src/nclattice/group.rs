use std::collections::{HashMap, VecDeque};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::factorial;
use crate::skewgrowth::{CoxeterType, Family};

pub const DEFAULT_ORDER_LIMIT: u64 = 1_000_000;
pub const DEFAULT_DIHEDRAL_LIMIT: u32 = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroupLimits {
    pub max_order: u64,
    pub max_dihedral: u32,
}

impl Default for GroupLimits {
    fn default() -> Self {
        GroupLimits { max_order: DEFAULT_ORDER_LIMIT, max_dihedral: DEFAULT_DIHEDRAL_LIMIT }
    }
}

/// A group element: an integer matrix in the root-lattice basis (row-major),
/// or a dihedral rotation/reflection index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupElement {
    Matrix(Vec<i64>),
    Dihedral { index: u32, reflection: bool },
}

/// Order of the finite Coxeter group of the given type.
pub fn group_order(ctype: CoxeterType) -> BigUint {
    let l = u64::from(ctype.rank());
    let f = |n: u64| factorial(n).to_biguint().unwrap_or_default();
    match ctype.family() {
        Family::A => f(l + 1),
        Family::B => (BigUint::from(1u32) << l) * f(l),
        Family::D => (BigUint::from(1u32) << (l - 1)) * f(l),
        Family::E => BigUint::from(match l {
            6 => 51_840u64,
            7 => 2_903_040,
            _ => 696_729_600,
        }),
        Family::F => BigUint::from(1152u32),
        Family::G => BigUint::from(12u32),
        Family::H => BigUint::from(if l == 3 { 120u32 } else { 14_400 }),
        Family::I2 => BigUint::from(2 * ctype.dihedral_order().unwrap_or(0)),
    }
}

/// Cartan matrix `a_ij = <alpha_j, alpha_i^vee>` together with the diagram
/// edges, Bourbaki numbering (0-based).
pub(crate) fn cartan_matrix(ctype: CoxeterType) -> Result<Vec<Vec<i64>>> {
    let n = ctype.rank() as usize;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match ctype.family() {
        Family::A => (1..n).for_each(|i| link(i - 1, i, -1, -1)),
        Family::B => {
            (1..n - 1).for_each(|i| link(i - 1, i, -1, -1));
            link(n - 2, n - 1, -2, -1);
        }
        Family::D => {
            (1..n - 1).for_each(|i| link(i - 1, i, -1, -1));
            link(n - 3, n - 1, -1, -1);
        }
        Family::E => {
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            (3..n).for_each(|i| link(i - 1, i, -1, -1));
        }
        Family::F => {
            link(0, 1, -1, -1);
            link(1, 2, -2, -1);
            link(2, 3, -1, -1);
        }
        Family::G => link(0, 1, -1, -3),
        Family::H | Family::I2 => {
            return Err(Error::Unsupported {
                ctype: ctype.to_string(),
                reason: "irrational realization out of scope".into(),
            })
        }
    }
    Ok(a)
}

#[derive(Clone, Debug)]
enum Realization {
    Matrix { n: usize, cartan: Vec<Vec<i64>> },
    Dihedral { p: u32 },
}

impl Realization {
    fn identity(&self) -> GroupElement {
        match self {
            Realization::Matrix { n, .. } => {
                let mut m = vec![0; n * n];
                (0..*n).for_each(|i| m[i * n + i] = 1);
                GroupElement::Matrix(m)
            }
            Realization::Dihedral { .. } => GroupElement::Dihedral { index: 0, reflection: false },
        }
    }

    fn rank(&self) -> usize {
        match self {
            Realization::Matrix { n, .. } => *n,
            Realization::Dihedral { .. } => 2,
        }
    }

    /// `g * s_i`. For matrices `s_i = I - e_i a_i^T`, so `g s_i = g - (g e_i) a_i^T`.
    fn times_generator(&self, g: &GroupElement, i: usize) -> GroupElement {
        match (self, g) {
            (Realization::Matrix { n, cartan }, GroupElement::Matrix(m)) => {
                let n = *n;
                let mut out = m.clone();
                for r in 0..n {
                    let gi = m[r * n + i];
                    if gi != 0 {
                        for c in 0..n {
                            out[r * n + c] -= gi * cartan[i][c];
                        }
                    }
                }
                GroupElement::Matrix(out)
            }
            (Realization::Dihedral { p }, GroupElement::Dihedral { index, reflection }) => {
                // rotation a = r^a, reflection a = r^a s; generators are reflections 0 and 1
                let p = *p;
                let gen = i as u32;
                if *reflection {
                    GroupElement::Dihedral { index: (index + p - gen) % p, reflection: false }
                } else {
                    GroupElement::Dihedral { index: (index + gen) % p, reflection: true }
                }
            }
            _ => unreachable!("element does not match its realization"),
        }
    }
}

/// A finite Coxeter group, fully enumerated.
#[derive(Clone, Debug)]
pub struct ReflectionGroup {
    ctype: CoxeterType,
    realization: Realization,
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, usize>,
    /// `right[g][i]` = index of `g s_i`.
    right: Vec<Vec<u32>>,
    /// A word in the generators for each element (BFS tree, shortest).
    words: Vec<Vec<u8>>,
    inverse: Vec<u32>,
    reflections: Vec<usize>,
    lengths: Vec<u32>,
}

pub fn build_group(ctype: CoxeterType) -> Result<ReflectionGroup> {
    build_group_with(ctype, GroupLimits::default())
}

pub fn build_group_with(ctype: CoxeterType, limits: GroupLimits) -> Result<ReflectionGroup> {
    let realization = if ctype.family() == Family::I2 {
        let p = ctype.dihedral_order().unwrap_or(0);
        if p > limits.max_dihedral {
            return Err(Error::OrderLimit {
                ctype: ctype.to_string(),
                order: (2 * u64::from(p)).to_string(),
                limit: 2 * u64::from(limits.max_dihedral),
            });
        }
        Realization::Dihedral { p }
    } else {
        let cartan = cartan_matrix(ctype)?;
        let order = group_order(ctype);
        if order > BigUint::from(limits.max_order) {
            return Err(Error::OrderLimit { ctype: ctype.to_string(), order: order.to_string(), limit: limits.max_order });
        }
        Realization::Matrix { n: ctype.rank() as usize, cartan }
    };
    let rank = realization.rank();

    let mut elements = vec![realization.identity()];
    let mut index = HashMap::new();
    index.insert(elements[0].clone(), 0usize);
    let mut words: Vec<Vec<u8>> = vec![Vec::new()];
    let mut right: Vec<Vec<u32>> = Vec::new();
    let mut g = 0;
    while g < elements.len() {
        let mut row = Vec::with_capacity(rank);
        for i in 0..rank {
            let h = realization.times_generator(&elements[g], i);
            let k = match index.get(&h) {
                Some(&k) => k,
                None => {
                    let k = elements.len();
                    let mut w = words[g].clone();
                    w.push(i as u8);
                    words.push(w);
                    index.insert(h.clone(), k);
                    elements.push(h);
                    k
                }
            };
            row.push(k as u32);
        }
        right.push(row);
        g += 1;
    }
    let expected = group_order(ctype);
    if BigUint::from(elements.len()) != expected {
        return Err(Error::Invariant(format!("{ctype}: enumerated {} elements, expected {expected}", elements.len())));
    }

    let mut group = ReflectionGroup {
        ctype,
        realization,
        elements,
        index,
        right,
        words,
        inverse: Vec::new(),
        reflections: Vec::new(),
        lengths: Vec::new(),
    };
    group.inverse = (0..group.len()).map(|g| {
        let w: Vec<u8> = group.words[g].iter().rev().copied().collect();
        group.apply_word(0, &w) as u32
    }).collect();

    // reflections: conjugates w s w^-1
    let mut seen = vec![false; group.len()];
    let mut reflections = Vec::new();
    for w in 0..group.len() {
        for i in 0..rank {
            let t = group.mul(group.mul(w, group.generator(i)), group.inverse[w] as usize);
            if !seen[t] {
                seen[t] = true;
                reflections.push(t);
            }
        }
    }
    reflections.sort_unstable();
    group.reflections = reflections;
    group.lengths = group.reflection_length_bfs();
    Ok(group)
}

impl ReflectionGroup {
    pub fn ctype(&self) -> CoxeterType {
        self.ctype
    }

    pub fn rank(&self) -> usize {
        self.realization.rank()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn element(&self, g: usize) -> &GroupElement {
        &self.elements[g]
    }

    pub fn index_of(&self, e: &GroupElement) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn generator(&self, i: usize) -> usize {
        self.right[0][i] as usize
    }

    pub fn generators(&self) -> Vec<usize> {
        (0..self.rank()).map(|i| self.generator(i)).collect()
    }

    pub fn reflections(&self) -> &[usize] {
        &self.reflections
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g] as usize
    }

    /// A shortest word in the simple generators.
    pub fn word(&self, g: usize) -> &[u8] {
        &self.words[g]
    }

    fn apply_word(&self, mut g: usize, w: &[u8]) -> usize {
        for &i in w {
            g = self.right[g][i as usize] as usize;
        }
        g
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.apply_word(g, &self.words[h])
    }

    /// Reflection length from breadth-first layering under right
    /// multiplication by reflections.
    pub fn reflection_length(&self, g: usize) -> u32 {
        self.lengths[g]
    }

    fn reflection_length_bfs(&self) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.len()];
        dist[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(g) = queue.pop_front() {
            for &t in &self.reflections {
                let h = self.mul(g, t);
                if dist[h] == u32::MAX {
                    dist[h] = dist[g] + 1;
                    queue.push_back(h);
                }
            }
        }
        dist
    }

    /// Codimension of the fixed space, from the rank of `g - I`.
    pub fn fixed_space_codimension(&self, g: usize) -> u32 {
        match &self.elements[g] {
            GroupElement::Matrix(m) => {
                let n = self.rank();
                let mut a: Vec<Vec<i128>> = (0..n)
                    .map(|r| (0..n).map(|c| i128::from(m[r * n + c]) - i128::from(r == c)).collect())
                    .collect();
                integer_rank(&mut a) as u32
            }
            GroupElement::Dihedral { index, reflection } => {
                if *reflection {
                    1
                } else if *index == 0 {
                    0
                } else {
                    2
                }
            }
        }
    }

    /// Order of an element.
    pub fn element_order(&self, g: usize) -> usize {
        let mut k = 1;
        let mut x = g;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Bipartite split of the simple generators: `(L, R)`, each
    /// pairwise commuting.
    pub fn bipartition(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.rank();
        let adjacent = |i: usize, j: usize| -> bool {
            match &self.realization {
                Realization::Matrix { cartan, .. } => cartan[i][j] != 0,
                Realization::Dihedral { .. } => true,
            }
        };
        let mut colour = vec![None; n];
        for start in 0..n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(0u8);
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                for j in 0..n {
                    if j != i && adjacent(i, j) && colour[j].is_none() {
                        colour[j] = Some(1 - colour[i].unwrap_or(0));
                        queue.push_back(j);
                    }
                }
            }
        }
        let left = (0..n).filter(|&i| colour[i] == Some(0)).collect();
        let right = (0..n).filter(|&i| colour[i] == Some(1)).collect();
        (left, right)
    }

    /// Product of the simple generators in the given order.
    pub fn coxeter_element_from_order(&self, order: &[usize]) -> usize {
        order.iter().fold(0, |g, &i| self.right[g][i] as usize)
    }
}

/// Bipartite Coxeter element `c = c_L c_R`.
pub fn coxeter_element(group: &ReflectionGroup) -> usize {
    let (l, r) = group.bipartition();
    let order: Vec<usize> = l.into_iter().chain(r).collect();
    group.coxeter_element_from_order(&order)
}

/// Rank by fraction-free elimination.
fn integer_rank(a: &mut [Vec<i128>]) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = 1i128;
    for c in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| a[r][c] != 0) else { continue };
        a.swap(rank, pivot);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
            }
            a[r][c] = 0;
        }
        prev = a[rank][c];
        rank += 1;
    }
    rank
}
