use std::collections::HashMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::group::{coxeter_element, GroupElement, ReflectionGroup};
use crate::error::{Error, Result};
use crate::exactmath::IntPoly;
use crate::skewgrowth::CoxeterType;

pub const DEFAULT_SUBSET_LIMIT: usize = 20;

/// Fixed-width bit set over lattice positions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BitSet(Vec<u64>);

impl BitSet {
    fn new(n: usize) -> BitSet {
        BitSet(vec![0; n.div_ceil(64)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn and(&self, o: &BitSet) -> BitSet {
        BitSet(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }

    fn is_subset(&self, o: &BitSet) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &bits)| {
            (0..64).filter(move |b| bits >> b & 1 == 1).map(move |b| w * 64 + b)
        })
    }
}

/// The interval `[1, c]_T` with its order, lattice operations and Möbius
/// values. Positions are sorted by grade, so position 0 is the identity and
/// the last position is `c`.
#[derive(Clone, Debug)]
pub struct NcLattice {
    ctype: CoxeterType,
    coxeter: GroupElement,
    elements: Vec<GroupElement>,
    grades: Vec<u32>,
    /// `up[x]` = positions `y` with `x <= y`.
    up: Vec<BitSet>,
    down: Vec<BitSet>,
    join: Vec<u32>,
    meet: Vec<u32>,
    mobius: Vec<i64>,
}

/// `[1, c]_T` for the bipartite Coxeter element.
pub fn nc_interval(group: &ReflectionGroup) -> Result<NcLattice> {
    nc_interval_for(group, coxeter_element(group))
}

/// `[1, c]_T` for an arbitrary Coxeter element `c` (a group index).
pub fn nc_interval_for(group: &ReflectionGroup, c: usize) -> Result<NcLattice> {
    let rank = group.reflection_length(c);
    let len = |g: usize| group.reflection_length(g);
    let mut members: Vec<usize> = (0..group.len())
        .filter(|&g| len(g) + len(group.mul(group.inverse(g), c)) == rank)
        .collect();
    members.sort_by_key(|&g| (len(g), g));
    let n = members.len();
    let mut up = vec![BitSet::new(n); n];
    let mut down = vec![BitSet::new(n); n];
    for (i, &x) in members.iter().enumerate() {
        for (j, &y) in members.iter().enumerate() {
            if len(x) <= len(y) && len(x) + len(group.mul(group.inverse(x), y)) == len(y) {
                up[i].insert(j);
                down[j].insert(i);
            }
        }
    }
    let grades: Vec<u32> = members.iter().map(|&g| len(g)).collect();
    let elements = members.iter().map(|&g| group.element(g).clone()).collect();
    from_order(group.ctype(), group.element(c).clone(), elements, grades, up, down)
}

fn from_order(
    ctype: CoxeterType,
    coxeter: GroupElement,
    elements: Vec<GroupElement>,
    grades: Vec<u32>,
    up: Vec<BitSet>,
    down: Vec<BitSet>,
) -> Result<NcLattice> {
    let n = elements.len();
    let bound = |sets: &[BitSet], a: usize, b: usize, pick_max: bool| -> Result<u32> {
        let common = sets[a].and(&sets[b]);
        let candidate = if pick_max { common.iter().last() } else { common.iter().next() };
        let x = candidate.ok_or_else(|| Error::NotALattice(format!("positions {a} and {b} have no common bound")))?;
        if !common.is_subset(&sets[x]) {
            return Err(Error::NotALattice(format!("positions {a} and {b} have no unique bound")));
        }
        Ok(x as u32)
    };
    let mut join = vec![0u32; n * n];
    let mut meet = vec![0u32; n * n];
    for a in 0..n {
        for b in a..n {
            // positions are sorted by grade: the least upper bound is the first
            // common upper bound, the greatest lower bound the last common lower one
            let j = bound(&up, a, b, false)?;
            let m = bound(&down, a, b, true)?;
            join[a * n + b] = j;
            join[b * n + a] = j;
            meet[a * n + b] = m;
            meet[b * n + a] = m;
        }
    }
    let mut mobius = vec![0i64; n];
    for x in 0..n {
        mobius[x] = if x == 0 { 1 } else { -down[x].iter().filter(|&y| y != x).map(|y| mobius[y]).sum::<i64>() };
    }
    Ok(NcLattice { ctype, coxeter, elements, grades, up, down, join, meet, mobius })
}

impl NcLattice {
    pub fn ctype(&self) -> CoxeterType {
        self.ctype
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn coxeter_element(&self) -> &GroupElement {
        &self.coxeter
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn grade(&self, x: usize) -> u32 {
        self.grades[x]
    }

    pub fn grades(&self) -> &[u32] {
        &self.grades
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.len() - 1
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    /// Positions `y <= x`.
    pub fn below(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.down[x].iter()
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.len() + y] as usize
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.len() + y] as usize
    }

    pub fn atoms(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.grades[x] == 1).collect()
    }

    /// Cover relations `(x, y)` with `x < y` and grades differing by one.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for x in 0..self.len() {
            for y in self.up[x].iter() {
                if self.grades[y] == self.grades[x] + 1 {
                    edges.push((x, y));
                }
            }
        }
        edges
    }

    /// `mu(1, x)` for every position.
    pub fn mobius(&self) -> &[i64] {
        &self.mobius
    }
}

/// `sum_x mu(1, x) t^(grade x)`.
pub fn characteristic_poly(ncl: &NcLattice) -> IntPoly {
    let rank = ncl.grades.iter().copied().max().unwrap_or(0) as usize;
    let mut coeffs = vec![BigInt::from(0); rank + 1];
    for (x, &m) in ncl.mobius.iter().enumerate() {
        coeffs[ncl.grades[x] as usize] += m;
    }
    IntPoly::new(coeffs)
}

/// `sum over subsets J of the atoms of (-1)^|J|`, grouped by `join(J)`.
fn subset_fold(ncl: &NcLattice, limit: usize) -> Result<Vec<i64>> {
    let atoms = ncl.atoms();
    let m = atoms.len();
    if m > limit {
        return Err(Error::SubsetLimit { atoms: m, limit });
    }
    let mut acc = vec![0i64; ncl.len()];
    let mut joins = vec![0u32; 1 << m];
    acc[ncl.bottom()] += 1;
    for mask in 1usize..1 << m {
        let low = mask.trailing_zeros() as usize;
        let j = ncl.join(joins[mask & (mask - 1)] as usize, atoms[low]);
        joins[mask] = j as u32;
        acc[j] += if mask.count_ones() % 2 == 0 { 1 } else { -1 };
    }
    Ok(acc)
}

/// `sum_J (-1)^|J| t^(deg join(J))` over subsets of atoms.
pub fn skew_growth_by_subsets(ncl: &NcLattice, limit: usize) -> Result<IntPoly> {
    let acc = subset_fold(ncl, limit)?;
    let rank = ncl.grades.iter().copied().max().unwrap_or(0) as usize;
    let mut coeffs = vec![BigInt::from(0); rank + 1];
    for (x, v) in acc.into_iter().enumerate() {
        coeffs[ncl.grades[x] as usize] += v;
    }
    Ok(IntPoly::new(coeffs))
}

/// For every `x`: `sum_(J : join J = x) (-1)^|J| = mu(1, x)`.
pub fn verify_mobius_identity(ncl: &NcLattice, limit: usize) -> Result<bool> {
    Ok(subset_fold(ncl, limit)? == ncl.mobius)
}

/// Serialized lattice: everything except the join and meet tables, which
/// are rebuilt on load.
#[derive(Serialize, Deserialize)]
struct CacheFile {
    format: u32,
    ctype: String,
    coxeter: GroupElement,
    elements: Vec<GroupElement>,
    grades: Vec<u32>,
    up: Vec<BitSet>,
    mobius: Vec<i64>,
}

const CACHE_FORMAT: u32 = 1;

impl NcLattice {
    pub fn to_json(&self) -> Result<String> {
        let file = CacheFile {
            format: CACHE_FORMAT,
            ctype: self.ctype.to_string(),
            coxeter: self.coxeter.clone(),
            elements: self.elements.clone(),
            grades: self.grades.clone(),
            up: self.up.clone(),
            mobius: self.mobius.clone(),
        };
        serde_json::to_string(&file).map_err(|e| Error::Cache(e.to_string()))
    }

    /// Rebuilds a lattice from [`NcLattice::to_json`] output, rejecting a
    /// file written for another type.
    pub fn from_json(s: &str, expected: CoxeterType) -> Result<NcLattice> {
        let file: CacheFile = serde_json::from_str(s).map_err(|e| Error::Cache(e.to_string()))?;
        if file.format != CACHE_FORMAT {
            return Err(Error::Cache(format!("unknown format {}", file.format)));
        }
        if file.ctype != expected.to_string() {
            return Err(Error::Cache(format!("file holds {}, not {expected}", file.ctype)));
        }
        let n = file.elements.len();
        if file.grades.len() != n || file.up.len() != n || file.mobius.len() != n {
            return Err(Error::Cache("inconsistent table sizes".into()));
        }
        let mut down = vec![BitSet::new(n); n];
        for (x, set) in file.up.iter().enumerate() {
            for y in set.iter() {
                if y >= n {
                    return Err(Error::Cache("order relation out of range".into()));
                }
                down[y].insert(x);
            }
        }
        let ncl = from_order(expected, file.coxeter, file.elements, file.grades, file.up, down)?;
        if ncl.mobius != file.mobius {
            return Err(Error::Cache("stored Möbius values disagree with the order".into()));
        }
        Ok(ncl)
    }
}

/// Positions keyed by element, for callers holding group elements.
pub fn position_map(ncl: &NcLattice) -> HashMap<GroupElement, usize> {
    ncl.elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect()
}
