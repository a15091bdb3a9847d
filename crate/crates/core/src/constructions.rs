//! Generator-set constructions: the quadratic-residue set over Z_n, the
//! norm-one set over GF(p^k), the parabola set over Z_5 x Z_p x Z_p, and the
//! greedy forbidden-set algorithm for arbitrary groups without small-order
//! elements.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::cayley::{GeneratorSet, VERTEX_CAP};
use crate::error::{Error, Result};
use crate::freeness::find_nontrivial_4cycle;
use crate::groups::{is_prime, AbelianGroup, FiniteField, GroupElement};

/// Parameters of a residue-set construction over Z_n.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Gamma1Recipe {
    pub n: u64,
    /// Chosen prime, the largest p >= 5 with 8*p^2 <= n.
    pub p: u64,
    /// s_a for a = 0..=(p-1)/2; all distinct, each in [p^2, 2p^2 - 2].
    pub s_values: Vec<u64>,
}

/// s_a = (p^2 + (a^2 mod p)*p + a) mod 8p^2, with a^2 mod p in {0..p-1}.
pub fn s_value(p: u64, a: u64) -> Result<u64> {
    if p < 5 || !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not a prime >= 5")));
    }
    if a >= p {
        return Err(Error::Domain(format!("a = {a} out of range [0, {}]", p - 1)));
    }
    let sq = a * a % p;
    Ok((p * p + sq * p + a) % (8 * p * p))
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Builds the residue construction over Z_n: S consists of +-s_a for
/// a <= (p-1)/2, and the returned set additionally contains +-1, so the
/// graph is connected. |S| = p + 1 and the full set has p + 3 generators.
///
/// The prime is found by direct downward search from floor(sqrt(n/8)), which
/// at this scale always succeeds for n >= 200.
pub fn build_gamma1(n: u64) -> Result<(GeneratorSet, Gamma1Recipe)> {
    let mut p = isqrt(n / 8);
    while p >= 5 && !is_prime(p) {
        p -= 1;
    }
    if p < 5 {
        return Err(Error::NoValidPrime { n });
    }
    let s_values: Vec<u64> = (0..=(p - 1) / 2).map(|a| s_value(p, a)).collect::<Result<_>>()?;
    debug_assert!(s_values.iter().all(|&s| p * p <= s && s <= 2 * p * p - 2));
    debug_assert_eq!(
        s_values.iter().collect::<HashSet<_>>().len(),
        s_values.len(),
        "s_a values must be pairwise distinct"
    );
    let group = AbelianGroup::make_cyclic(n)?;
    let mut elems = Vec::new();
    for &s in &s_values {
        elems.push(group.element(&[s])?);
        elems.push(group.element(&[n - s])?);
    }
    elems.push(group.element(&[1])?);
    elems.push(group.element(&[n - 1])?);
    let set = GeneratorSet::new(group, elems)?;
    debug_assert_eq!(set.len() as u64, p + 3);
    Ok((set, Gamma1Recipe { n, p, s_values }))
}

/// Builds the norm-one construction over GF(p^k) for odd prime p and even k:
/// all field elements s with s^{q+1} = 1 where q = p^{k/2}, mapped to the
/// additive group Z_p^k. The set is symmetric of size q + 1.
pub fn build_gamma2(p: u64, k: usize) -> Result<GeneratorSet> {
    if k == 0 || k % 2 != 0 {
        return Err(Error::Parity(format!(
            "extension degree must be even and positive, got {k}"
        )));
    }
    let field = FiniteField::make(p, k)?;
    if field.order() > VERTEX_CAP {
        return Err(Error::Size(format!(
            "field order {} exceeds the vertex cap {VERTEX_CAP}",
            field.order()
        )));
    }
    let q = isqrt(field.order()); // p^(k/2)
    debug_assert_eq!(q * q, field.order());
    let one = field.one();
    let elems: Vec<GroupElement> = field
        .elements()
        .filter(|s| *s != field.zero() && field.pow(s, q + 1).expect("member") == one)
        .collect();
    if elems.len() as u64 != q + 1 {
        return Err(Error::Inconsistency(format!(
            "norm-one set has {} elements, expected q + 1 = {}",
            elems.len(),
            q + 1
        )));
    }
    GeneratorSet::new(field.additive_group(), elems)
}

/// Builds the parabola construction over Z_5 x Z_p x Z_p for an odd prime p:
/// (1, a, a^2) and its negation for every a in Z_p. |S| = 2p.
pub fn build_gamma3(p: u64) -> Result<GeneratorSet> {
    if p < 3 || !is_prime(p) {
        return Err(Error::InvalidCharacteristic(format!(
            "{p} is not an odd prime"
        )));
    }
    let group = AbelianGroup::make_product(&[5, p, p])?;
    let mut elems = Vec::new();
    for a in 0..p {
        let pos = group.element(&[1, a, a * a % p])?;
        elems.push(group.neg(&pos)?);
        elems.push(pos);
    }
    let set = GeneratorSet::new(group, elems)?;
    debug_assert_eq!(set.len() as u64, 2 * p);
    Ok(set)
}

/// The three forbidden sets of a generator set S, and their union:
/// F1 = all triple sums over S, F2 = all a with -2a a pair sum over S,
/// F3 = all a with 3a in S.
#[derive(Clone, Debug)]
pub struct ForbiddenSets {
    pub f1: Vec<GroupElement>,
    pub f2: Vec<GroupElement>,
    pub f3: Vec<GroupElement>,
    pub union: Vec<GroupElement>,
    union_mask: Vec<bool>,
}

impl ForbiddenSets {
    pub fn union_len(&self) -> u64 {
        self.union.len() as u64
    }

    pub fn union_contains_rank(&self, rank: u64) -> bool {
        self.union_mask[rank as usize]
    }

    /// Least-rank group element outside the union, if any.
    pub fn first_uncovered(&self, group: &AbelianGroup) -> Option<GroupElement> {
        self.union_mask
            .iter()
            .position(|&covered| !covered)
            .map(|r| group.element_at(r as u64).expect("rank in range"))
    }
}

/// Computes the forbidden sets by exhaustive enumeration. Requires the group
/// to have no elements of order 2 or 3, which caps |F2| at |S|^2 and |F3| at
/// |S|.
pub fn forbidden_sets(s: &GeneratorSet) -> Result<ForbiddenSets> {
    let group = s.group();
    if !group.forbids_small_orders() {
        return Err(Error::SmallOrder {
            order: group.order(),
        });
    }
    let n = group.order() as usize;

    let pair_sums: HashSet<u64> = {
        let mut sums = HashSet::new();
        for b in s.elements() {
            for c in s.elements() {
                let e = group.add(b, c)?;
                sums.insert(group.rank_of(&e)?);
            }
        }
        sums
    };

    let mut f1_mask = vec![false; n];
    for &ps in &pair_sums {
        let pe = group.element_at(ps)?;
        for a in s.elements() {
            let e = group.add(&pe, a)?;
            f1_mask[group.rank_of(&e)? as usize] = true;
        }
    }

    let mut f2_mask = vec![false; n];
    let mut f3_mask = vec![false; n];
    for r in 0..n as u64 {
        let a = group.element_at(r)?;
        let minus_2a = group.neg(&group.scalar_mul(2, &a)?)?;
        if pair_sums.contains(&group.rank_of(&minus_2a)?) {
            f2_mask[r as usize] = true;
        }
        if s.contains(&group.scalar_mul(3, &a)?) {
            f3_mask[r as usize] = true;
        }
    }

    let collect = |mask: &[bool]| -> Vec<GroupElement> {
        mask.iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(r, _)| group.element_at(r as u64).expect("rank in range"))
            .collect()
    };
    let union_mask: Vec<bool> = (0..n)
        .map(|r| f1_mask[r] || f2_mask[r] || f3_mask[r])
        .collect();
    Ok(ForbiddenSets {
        f1: collect(&f1_mask),
        f2: collect(&f2_mask),
        f3: collect(&f3_mask),
        union: collect(&union_mask),
        union_mask,
    })
}

/// One run of the greedy generating-set algorithm, with enough detail to
/// replay every intermediate set.
#[derive(Clone, Debug)]
pub struct GreedyOutcome {
    pub set: GeneratorSet,
    /// The seed set: one unit vector per cyclic factor, closed under negation.
    pub initial: GeneratorSet,
    /// Elements chosen from outside the forbidden union, in order; each step
    /// added the element and its negation.
    pub additions: Vec<GroupElement>,
}

impl GreedyOutcome {
    /// The generator sets after 0, 1, ..., all additions.
    pub fn intermediate_sets(&self) -> Result<Vec<GeneratorSet>> {
        let group = self.initial.group().clone();
        let mut sets = vec![self.initial.clone()];
        let mut elems: Vec<GroupElement> = self.initial.elements().to_vec();
        for a in &self.additions {
            elems.push(a.clone());
            elems.push(group.neg(a)?);
            sets.push(GeneratorSet::new(group.clone(), elems.clone())?);
        }
        Ok(sets)
    }
}

/// Greedy construction of a generating set whose Cayley graph is connected
/// and K_{2,3}-free, for any group without elements of order 2 or 3.
///
/// Starts from the canonical unit vectors closed under negation, then
/// repeatedly adds the least-ranked element outside the forbidden union until
/// that union covers the whole group. At return |S|^3 + |S|^2 + |S| >= n.
pub fn greedy_generating_set(group: &AbelianGroup) -> Result<GeneratorSet> {
    Ok(greedy_with_trace(group)?.set)
}

pub fn greedy_with_trace(group: &AbelianGroup) -> Result<GreedyOutcome> {
    if !group.forbids_small_orders() {
        return Err(Error::SmallOrder {
            order: group.order(),
        });
    }
    let width = group.rank_width();
    let mut elems = Vec::new();
    for i in 0..width {
        let mut coords = vec![0u64; width];
        coords[i] = 1;
        let e = group.element(&coords)?;
        elems.push(group.neg(&e)?);
        elems.push(e);
    }
    let initial = GeneratorSet::new(group.clone(), elems.clone())?;
    // The seed set must itself be clean; this holds whenever the supplied
    // product decomposition is a minimal generating set, and is checked here
    // rather than assumed.
    if let Some(w) = find_nontrivial_4cycle(&initial) {
        return Err(Error::Domain(format!(
            "unit-vector seed set has a non-trivial 4-cycle through {:?}; \
             the product decomposition is not minimal",
            w.generators
        )));
    }

    let mut set = initial.clone();
    let mut additions = Vec::new();
    loop {
        let forbidden = forbidden_sets(&set)?;
        let Some(star) = forbidden.first_uncovered(group) else {
            break;
        };
        elems.push(group.neg(&star)?);
        elems.push(star.clone());
        additions.push(star);
        set = GeneratorSet::new(group.clone(), elems.clone())?;
        debug_assert!(find_nontrivial_4cycle(&set).is_none());
    }

    let k = set.len() as u64;
    debug_assert!(k * k * k + k * k + k >= group.order());
    Ok(GreedyOutcome {
        set,
        initial,
        additions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::CayleyGraph;
    use crate::freeness::{check_k2t_free_cayley, check_triangle_free};

    #[test]
    fn s_value_formula() {
        assert_eq!(s_value(5, 0).unwrap(), 25);
        assert_eq!(s_value(5, 1).unwrap(), 31);
        assert_eq!(s_value(5, 2).unwrap(), 47);
        assert!(s_value(5, 5).is_err());
        assert!(s_value(4, 0).is_err());
    }

    #[test]
    fn gamma1_at_minimum_order() {
        let (set, recipe) = build_gamma1(200).unwrap();
        assert_eq!(recipe.p, 5);
        assert_eq!(recipe.s_values, vec![25, 31, 47]);
        assert_eq!(set.len(), 8);
        let ranks: Vec<u64> = set.ranks().collect();
        assert_eq!(ranks, vec![1, 25, 31, 47, 153, 169, 175, 199]);
        // |S| without the +-1 pad is p + 1
        assert_eq!(2 * recipe.s_values.len() as u64, recipe.p + 1);
    }

    #[test]
    fn gamma1_boundary_and_larger_orders() {
        assert!(matches!(build_gamma1(199), Err(Error::NoValidPrime { .. })));
        let (_, r250) = build_gamma1(250).unwrap();
        assert_eq!(r250.p, 5);
        let (set, r1000) = build_gamma1(1000).unwrap();
        assert_eq!(r1000.p, 11);
        assert_eq!(set.len() as u64, r1000.p + 3);
        let g = CayleyGraph::build(set).unwrap();
        assert!(g.is_connected());
    }

    #[test]
    fn gamma1_s_values_distinct_up_to_p_100() {
        let mut p = 5u64;
        while p <= 100 {
            if is_prime(p) {
                let vals: Vec<u64> = (0..=(p - 1) / 2).map(|a| s_value(p, a).unwrap()).collect();
                let distinct: HashSet<u64> = vals.iter().copied().collect();
                assert_eq!(distinct.len(), vals.len(), "p = {p}");
                for &v in &vals {
                    assert!(p * p <= v && v <= 2 * p * p - 2, "p = {p}, s = {v}");
                }
                // S+ and S- are disjoint in Z_n for n >= 8p^2
                let n = 8 * p * p;
                assert!(vals.iter().all(|&v| !vals.contains(&(n - v))));
            }
            p += 2;
        }
    }

    #[test]
    fn gamma2_small_fields() {
        let s = build_gamma2(3, 2).unwrap();
        assert_eq!(s.len(), 4);
        // with modulus x^2 + 1 the norm-one set is {±1, ±x}
        let ranks: Vec<u64> = s.ranks().collect();
        assert_eq!(ranks, vec![1, 2, 3, 6]);

        assert_eq!(build_gamma2(5, 2).unwrap().len(), 6);
        assert_eq!(build_gamma2(3, 4).unwrap().len(), 10);
        assert!(matches!(build_gamma2(3, 3), Err(Error::Parity(_))));
        assert!(matches!(
            build_gamma2(4, 2),
            Err(Error::InvalidCharacteristic(_))
        ));
    }

    #[test]
    fn gamma2_at_3_2_is_the_torus() {
        let g = CayleyGraph::build(build_gamma2(3, 2).unwrap()).unwrap();
        assert_eq!(g.n(), 9);
        assert!((0..9).all(|v| g.graph().degree(v) == 4));
        assert!(g.is_connected());
    }

    #[test]
    fn gamma3_small_primes() {
        let s = build_gamma3(3).unwrap();
        let mut coords: Vec<Vec<u64>> = s.elements().iter().map(|e| e.coords().to_vec()).collect();
        coords.sort();
        let mut expected = vec![
            vec![1, 0, 0],
            vec![1, 1, 1],
            vec![1, 2, 1],
            vec![4, 0, 0],
            vec![4, 2, 2],
            vec![4, 1, 2],
        ];
        expected.sort();
        assert_eq!(coords, expected);

        let s5 = build_gamma3(5).unwrap();
        assert_eq!(s5.len(), 10);
        assert_eq!(s5.group().order(), 125);

        assert!(matches!(
            build_gamma3(2),
            Err(Error::InvalidCharacteristic(_))
        ));
    }

    #[test]
    fn gamma3_is_connected_and_clean_at_p3() {
        let s = build_gamma3(3).unwrap();
        let g = CayleyGraph::build(s.clone()).unwrap();
        assert!(g.is_connected());
        assert!(check_triangle_free(&s).free);
        assert!(find_nontrivial_4cycle(&s).is_none());
        assert!(check_k2t_free_cayley(&g, 3).unwrap().free);
    }

    #[test]
    fn forbidden_sets_on_inverse_pair_in_z7() {
        let group = AbelianGroup::make_cyclic(7).unwrap();
        let s = GeneratorSet::new(
            group.clone(),
            vec![group.element(&[1]).unwrap(), group.element(&[6]).unwrap()],
        )
        .unwrap();
        let f = forbidden_sets(&s).unwrap();
        let f1_ranks: Vec<u64> = f.f1.iter().map(|e| group.rank_of(e).unwrap()).collect();
        assert_eq!(f1_ranks, vec![1, 3, 4, 6]);
        let k = s.len() as u64;
        assert!(f.union_len() <= k * k * k + k * k + k);
    }

    #[test]
    fn forbidden_sets_of_empty_set_are_empty() {
        let group = AbelianGroup::make_cyclic(7).unwrap();
        let s = GeneratorSet::new(group, vec![]).unwrap();
        let f = forbidden_sets(&s).unwrap();
        assert!(f.f1.is_empty() && f.f2.is_empty() && f.f3.is_empty());
        assert!(f.union.is_empty());
    }

    #[test]
    fn forbidden_sets_reject_small_order_groups() {
        let group = AbelianGroup::make_cyclic(45).unwrap();
        let s = GeneratorSet::new(
            group.clone(),
            vec![group.element(&[1]).unwrap(), group.element(&[44]).unwrap()],
        )
        .unwrap();
        assert!(matches!(forbidden_sets(&s), Err(Error::SmallOrder { .. })));
    }

    #[test]
    fn greedy_on_z7_covers_group() {
        let group = AbelianGroup::make_cyclic(7).unwrap();
        let out = greedy_with_trace(&group).unwrap();
        let f = forbidden_sets(&out.set).unwrap();
        assert_eq!(f.union_len(), 7);
        let k = out.set.len() as u64;
        assert!(k * k * k + k * k + k >= 7);
    }

    #[test]
    fn greedy_on_z175_yields_connected_k23_free_graph() {
        let group = AbelianGroup::make_cyclic(175).unwrap();
        let set = greedy_generating_set(&group).unwrap();
        let g = CayleyGraph::build(set).unwrap();
        assert!(g.is_connected());
        assert!(check_k2t_free_cayley(&g, 3).unwrap().free);
    }

    #[test]
    fn greedy_rejects_small_order_groups() {
        let group = AbelianGroup::make_cyclic(45).unwrap();
        assert!(matches!(
            greedy_generating_set(&group),
            Err(Error::SmallOrder { .. })
        ));
    }

    #[test]
    fn greedy_intermediates_have_no_nontrivial_4cycles() {
        let group = AbelianGroup::make_product(&[5, 7]).unwrap();
        let out = greedy_with_trace(&group).unwrap();
        for s in out.intermediate_sets().unwrap() {
            assert!(find_nontrivial_4cycle(&s).is_none());
        }
        assert_eq!(
            out.intermediate_sets().unwrap().last().unwrap().elements(),
            out.set.elements()
        );
    }
}
