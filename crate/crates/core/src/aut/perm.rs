use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

/// A permutation of `0..n` stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    /// Wraps an image list; returns `None` unless it is a bijection.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return None;
            }
        }
        Some(Perm(images))
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Perm(inv)
    }

    /// `self` after `other`: `x -> self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&x| self.0[x]).collect())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("group of order {order} exceeds the enumeration cap {cap}")]
pub struct TooLarge {
    pub order: BigUint,
    pub cap: usize,
}

/// A permutation group given by generators, with its exact order and orbits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    order: BigUint,
    orbits: Vec<Vec<usize>>,
}

impl PermGroup {
    pub(crate) fn new(degree: usize, generators: Vec<Perm>, order: BigUint) -> Self {
        let orbits = orbits_from_generators(degree, &generators);
        PermGroup {
            degree,
            generators,
            order,
            orbits,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    /// Orbits, each sorted, listed by smallest element.
    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    /// Index of the orbit containing each point.
    pub fn orbit_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.degree];
        for (i, orbit) in self.orbits.iter().enumerate() {
            for &v in orbit {
                idx[v] = i;
            }
        }
        idx
    }

    /// Smallest element of every orbit.
    pub fn orbit_representatives(&self) -> Vec<usize> {
        self.orbits.iter().map(|o| o[0]).collect()
    }

    /// All group elements, by closure under the generators. Fails if the
    /// order exceeds `cap`.
    pub fn enumerate_elements(&self, cap: usize) -> Result<Vec<Perm>, TooLarge> {
        if self.order > BigUint::from(cap) {
            return Err(TooLarge {
                order: self.order.clone(),
                cap,
            });
        }
        let id = Perm::identity(self.degree);
        let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
        let mut out = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(p) = queue.pop_front() {
            for g in &self.generators {
                let q = g.compose(&p);
                if seen.insert(q.clone()) {
                    out.push(q.clone());
                    queue.push_back(q);
                }
            }
        }
        out.sort();
        Ok(out)
    }
}

pub fn orbits_of(group: &PermGroup) -> Vec<Vec<usize>> {
    group.orbits.clone()
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // smaller root wins so roots are orbit minima
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    pub(crate) fn absorb(&mut self, p: &Perm) {
        for x in 0..p.degree() {
            self.union(x, p.apply(x));
        }
    }
}

fn orbits_from_generators(n: usize, generators: &[Perm]) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(n);
    for g in generators {
        uf.absorb(g);
    }
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 0..n {
        let r = uf.find(v);
        buckets[r].push(v);
    }
    buckets.into_iter().filter(|b| !b.is_empty()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Perm {
        Perm::from_images(v.to_vec()).unwrap()
    }

    #[test]
    fn perm_algebra() {
        let a = p(&[1, 2, 0]);
        assert!(a.compose(&a.inverse()).is_identity());
        assert_eq!(a.compose(&a), p(&[2, 0, 1]));
        assert!(Perm::from_images(vec![0, 0]).is_none());
        assert!(Perm::from_images(vec![0, 2]).is_none());
        assert_eq!(a.to_string(), "1 2 0");
    }

    #[test]
    fn closure_and_orbits() {
        // symmetric group on {0,1,2} from a transposition and a 3-cycle
        let g = PermGroup::new(4, vec![p(&[1, 0, 2, 3]), p(&[1, 2, 0, 3])], 6u32.into());
        assert_eq!(g.orbits(), &[vec![0, 1, 2], vec![3]]);
        assert_eq!(g.enumerate_elements(10).unwrap().len(), 6);
        assert!(g.enumerate_elements(5).is_err());
        assert_eq!(g.orbit_representatives(), vec![0, 3]);
    }
}
