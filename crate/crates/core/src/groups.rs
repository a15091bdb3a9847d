//! Finite abelian groups given as explicit products of cyclic groups, plus
//! finite-field arithmetic for GF(p^k).
//!
//! Groups are always presented as Z_{m1} x ... x Z_{mr}; elements are
//! coordinate vectors of reduced residues. Everything here is an immutable
//! value after construction.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Deterministic primality test by trial division up to sqrt(n).
///
/// Intended for desk-scale inputs (p up to about 10^12); all construction
/// parameters in this crate are far below that.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// A finite abelian group Z_{m1} x ... x Z_{mr} with componentwise arithmetic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroup {
    moduli: Vec<u64>,
    order: u64,
}

/// An element of an [`AbelianGroup`]: one reduced residue per cyclic factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    coords: Vec<u64>,
}

impl GroupElement {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }
}

impl std::fmt::Display for GroupElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coords.len() == 1 {
            return write!(f, "{}", self.coords[0]);
        }
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl AbelianGroup {
    /// The cyclic group Z_n.
    pub fn make_cyclic(n: u64) -> Result<Self> {
        Self::make_product(&[n])
    }

    /// The product group Z_{m1} x ... x Z_{mr}.
    ///
    /// Every modulus must be at least 2 and the total order must fit in a
    /// signed 64-bit integer; anything else is rejected rather than silently
    /// overflowing.
    pub fn make_product(moduli: &[u64]) -> Result<Self> {
        if moduli.is_empty() {
            return Err(Error::InvalidOrder("empty list of moduli".into()));
        }
        let mut order: u64 = 1;
        for &m in moduli {
            if m < 2 {
                return Err(Error::InvalidOrder(format!("modulus {m} is below 2")));
            }
            order = order
                .checked_mul(m)
                .filter(|&o| o <= i64::MAX as u64)
                .ok_or_else(|| Error::InvalidOrder("group order exceeds 2^63 - 1".into()))?;
        }
        Ok(Self {
            moduli: moduli.to_vec(),
            order,
        })
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Number of cyclic factors.
    pub fn rank_width(&self) -> usize {
        self.moduli.len()
    }

    /// The identity element.
    pub fn zero(&self) -> GroupElement {
        GroupElement {
            coords: vec![0; self.moduli.len()],
        }
    }

    /// Builds an element from raw coordinates, reducing each one modulo its
    /// factor. Errors if the coordinate count does not match the group.
    pub fn element(&self, coords: &[u64]) -> Result<GroupElement> {
        if coords.len() != self.moduli.len() {
            return Err(Error::Domain(format!(
                "element has {} coordinates, group has {} factors",
                coords.len(),
                self.moduli.len()
            )));
        }
        Ok(GroupElement {
            coords: coords
                .iter()
                .zip(&self.moduli)
                .map(|(&c, &m)| c % m)
                .collect(),
        })
    }

    fn check_member(&self, g: &GroupElement) -> Result<()> {
        if g.coords.len() != self.moduli.len()
            || g.coords.iter().zip(&self.moduli).any(|(&c, &m)| c >= m)
        {
            return Err(Error::Domain(format!(
                "element {g} does not belong to a group with moduli {:?}",
                self.moduli
            )));
        }
        Ok(())
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check_member(a)?;
        self.check_member(b)?;
        Ok(GroupElement {
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .zip(&self.moduli)
                .map(|((&x, &y), &m)| (x + y) % m)
                .collect(),
        })
    }

    pub fn neg(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check_member(a)?;
        Ok(GroupElement {
            coords: a
                .coords
                .iter()
                .zip(&self.moduli)
                .map(|(&x, &m)| (m - x) % m)
                .collect(),
        })
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        let nb = self.neg(b)?;
        self.add(a, &nb)
    }

    /// m-fold sum of g, by componentwise modular multiplication.
    pub fn scalar_mul(&self, m: u64, g: &GroupElement) -> Result<GroupElement> {
        self.check_member(g)?;
        Ok(GroupElement {
            coords: g
                .coords
                .iter()
                .zip(&self.moduli)
                .map(|(&c, &md)| ((m as u128 * c as u128) % md as u128) as u64)
                .collect(),
        })
    }

    /// Least m >= 1 with m*g = 0: the lcm of the per-coordinate orders
    /// m_i / gcd(c_i, m_i).
    pub fn element_order(&self, g: &GroupElement) -> Result<u64> {
        self.check_member(g)?;
        Ok(g.coords
            .iter()
            .zip(&self.moduli)
            .map(|(&c, &m)| m / gcd(c, m))
            .fold(1, lcm))
    }

    /// True iff the group has no elements of order 2 or 3.
    ///
    /// For abelian groups an element of prime order q exists iff q divides
    /// the group order (Cauchy), so this reduces to gcd(n, 6) = 1.
    pub fn forbids_small_orders(&self) -> bool {
        gcd(self.order, 6) == 1
    }

    /// Canonical vertex rank of an element: mixed-radix value of the
    /// coordinate vector with the last coordinate varying fastest.
    pub fn rank_of(&self, g: &GroupElement) -> Result<u64> {
        self.check_member(g)?;
        Ok(g.coords
            .iter()
            .zip(&self.moduli)
            .fold(0u64, |acc, (&c, &m)| acc * m + c))
    }

    /// Inverse of [`rank_of`](Self::rank_of).
    pub fn element_at(&self, rank: u64) -> Result<GroupElement> {
        if rank >= self.order {
            return Err(Error::Domain(format!(
                "rank {rank} out of range for group of order {}",
                self.order
            )));
        }
        let mut coords = vec![0u64; self.moduli.len()];
        let mut r = rank;
        for (i, &m) in self.moduli.iter().enumerate().rev() {
            coords[i] = r % m;
            r /= m;
        }
        Ok(GroupElement { coords })
    }

    /// All group elements in canonical rank order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order).map(|r| self.element_at(r).expect("rank in range"))
    }
}

// ---------------------------------------------------------------------------
// Polynomial arithmetic over Z_p (coefficient vectors, index i = coeff of x^i)
// ---------------------------------------------------------------------------

fn mod_mul(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

fn mod_pow(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mod_mul(acc, base, p);
        }
        base = mod_mul(base, base, p);
        e >>= 1;
    }
    acc
}

fn mod_inv(a: u64, p: u64) -> u64 {
    mod_pow(a, p - 2, p)
}

fn poly_trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mod_mul(x, y, p)) % p;
        }
    }
    poly_trim(&mut out);
    out
}

/// Remainder of a modulo the monic polynomial f.
fn poly_rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    debug_assert_eq!(*f.last().unwrap(), 1, "modulus must be monic");
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let deg_f = f.len() - 1;
    while r.len() > deg_f {
        let lead = *r.last().unwrap();
        let shift = r.len() - f.len();
        if lead != 0 {
            for (j, &fc) in f.iter().enumerate() {
                let idx = shift + j;
                let sub = mod_mul(lead, fc, p);
                r[idx] = (r[idx] + p - sub) % p;
            }
        }
        r.pop();
        poly_trim(&mut r);
    }
    r
}

fn poly_mul_mod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    poly_rem(&poly_mul(a, b, p), f, p)
}

/// x^e mod f by square-and-multiply.
fn x_pow_mod(e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64]; // 1
    let mut base = poly_rem(&[0, 1], f, p); // x
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mul_mod(&acc, &base, f, p);
        }
        base = poly_mul_mod(&base, &base, f, p);
        e >>= 1;
    }
    acc
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !b.is_empty() {
        // make b monic, then reduce a by it
        let inv = mod_inv(*b.last().unwrap(), p);
        let monic: Vec<u64> = b.iter().map(|&c| mod_mul(c, inv, p)).collect();
        let r = poly_rem(&a, &monic, p);
        a = b;
        b = r;
    }
    a
}

fn poly_eval(f: &[u64], x: u64, p: u64) -> u64 {
    f.iter().rev().fold(0u64, |acc, &c| (mod_mul(acc, x, p) + c) % p)
}

/// Irreducibility over Z_p of a monic polynomial of degree k.
///
/// Degree <= 3 reduces to root-freeness. Higher degrees use the Frobenius
/// criterion: x^{p^k} = x mod f, and gcd(x^{p^{k/q}} - x, f) = 1 for every
/// prime q dividing k.
fn poly_is_irreducible(f: &[u64], p: u64) -> bool {
    let k = f.len() - 1;
    if k == 1 {
        return true;
    }
    if (0..p).any(|c| poly_eval(f, c, p) == 0) {
        return false;
    }
    if k <= 3 {
        return true;
    }
    let full = match p.checked_pow(k as u32) {
        Some(v) => v,
        None => return false, // beyond representable scale; never reached by constructors
    };
    let xq = x_pow_mod(full, f, p);
    let mut frob = xq;
    // frob - x must be 0 mod f
    if frob.len() < 2 {
        frob.resize(2, 0);
    }
    frob[1] = (frob[1] + p - 1) % p;
    poly_trim(&mut frob);
    if !frob.is_empty() {
        return false;
    }
    let mut rem = k;
    let mut q = 2usize;
    let mut prime_divs = vec![];
    while q * q <= rem {
        if rem % q == 0 {
            prime_divs.push(q);
            while rem % q == 0 {
                rem /= q;
            }
        }
        q += 1;
    }
    if rem > 1 {
        prime_divs.push(rem);
    }
    for q in prime_divs {
        let e = p.pow((k / q) as u32);
        let mut diff = x_pow_mod(e, f, p);
        if diff.len() < 2 {
            diff.resize(2, 0);
        }
        diff[1] = (diff[1] + p - 1) % p;
        poly_trim(&mut diff);
        let g = poly_gcd(f, &diff, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// The finite field GF(p^k): Z_p[x] modulo a monic irreducible polynomial.
///
/// Elements are coefficient vectors of length k, i.e. elements of the
/// additive group Z_p^k, so they double as Cayley-graph vertices directly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteField {
    p: u64,
    k: usize,
    irreducible: Vec<u64>,
    order: u64,
}

impl FiniteField {
    /// Constructs GF(p^k) for an odd prime p and k >= 1.
    ///
    /// The modulus is the first irreducible monic polynomial of degree k in
    /// lexicographic coefficient order (low-degree coefficients vary
    /// fastest), so construction is reproducible.
    pub fn make(p: u64, k: usize) -> Result<Self> {
        if p < 3 || !is_prime(p) {
            return Err(Error::InvalidCharacteristic(format!(
                "{p} is not an odd prime"
            )));
        }
        if k < 1 {
            return Err(Error::Domain("extension degree must be at least 1".into()));
        }
        let mut order: u64 = 1;
        for _ in 0..k {
            order = order
                .checked_mul(p)
                .filter(|&o| o <= i64::MAX as u64)
                .ok_or_else(|| Error::InvalidOrder("field order exceeds 2^63 - 1".into()))?;
        }
        let irreducible = (0..order)
            .map(|m| {
                let mut coeffs = vec![0u64; k + 1];
                let mut v = m;
                for c in coeffs.iter_mut().take(k) {
                    *c = v % p;
                    v /= p;
                }
                coeffs[k] = 1;
                coeffs
            })
            .find(|f| poly_is_irreducible(f, p))
            .ok_or_else(|| Error::Inconsistency("no irreducible polynomial found".into()))?;
        Ok(Self {
            p,
            k,
            irreducible,
            order,
        })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Coefficients of the irreducible modulus, index i = coefficient of x^i.
    pub fn modulus(&self) -> &[u64] {
        &self.irreducible
    }

    /// The additive group Z_p^k of the field.
    pub fn additive_group(&self) -> AbelianGroup {
        AbelianGroup::make_product(&vec![self.p; self.k]).expect("valid by construction")
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            coords: vec![0; self.k],
        }
    }

    pub fn one(&self) -> GroupElement {
        let mut coords = vec![0; self.k];
        coords[0] = 1;
        GroupElement { coords }
    }

    fn check_member(&self, a: &GroupElement) -> Result<()> {
        if a.coords.len() != self.k || a.coords.iter().any(|&c| c >= self.p) {
            return Err(Error::Domain(format!(
                "element {a} does not belong to GF({}^{})",
                self.p, self.k
            )));
        }
        Ok(())
    }

    pub fn mul(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check_member(a)?;
        self.check_member(b)?;
        let mut prod = poly_mul_mod(&a.coords, &b.coords, &self.irreducible, self.p);
        prod.resize(self.k, 0);
        Ok(GroupElement { coords: prod })
    }

    /// a^e by square-and-multiply; a^0 = 1 for every a.
    pub fn pow(&self, a: &GroupElement, e: u64) -> Result<GroupElement> {
        self.check_member(a)?;
        let mut acc = self.one();
        let mut base = a.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base)?;
            }
            base = self.mul(&base, &base)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// All field elements in additive rank order (coefficient vectors).
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        let g = self.additive_group();
        (0..self.order).map(move |r| g.element_at(r).expect("rank in range"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_constructors() {
        assert_eq!(AbelianGroup::make_cyclic(12).unwrap().order(), 12);
        assert_eq!(AbelianGroup::make_cyclic(200).unwrap().order(), 200);
        assert!(matches!(
            AbelianGroup::make_cyclic(1),
            Err(Error::InvalidOrder(_))
        ));
    }

    #[test]
    fn product_constructors() {
        assert_eq!(AbelianGroup::make_product(&[5, 3, 3]).unwrap().order(), 45);
        assert_eq!(AbelianGroup::make_product(&[3, 3]).unwrap().order(), 9);
        assert!(AbelianGroup::make_product(&[5, 1]).is_err());
        assert!(AbelianGroup::make_product(&[]).is_err());
        // order overflow is rejected
        assert!(AbelianGroup::make_product(&[u64::MAX / 2, 8]).is_err());
    }

    #[test]
    fn componentwise_arithmetic() {
        let z12 = AbelianGroup::make_cyclic(12).unwrap();
        let a = z12.element(&[7]).unwrap();
        let b = z12.element(&[8]).unwrap();
        assert_eq!(z12.add(&a, &b).unwrap().coords(), &[3]);

        let g = AbelianGroup::make_product(&[5, 3, 3]).unwrap();
        let e = g.element(&[1, 2, 1]).unwrap();
        assert_eq!(g.neg(&e).unwrap().coords(), &[4, 1, 2]);

        for r in [0u64, 7, 31, 44] {
            let x = g.element_at(r).unwrap();
            assert_eq!(g.add(&x, &g.zero()).unwrap(), x);
            let nx = g.neg(&x).unwrap();
            assert_eq!(g.add(&x, &nx).unwrap(), g.zero());
        }
    }

    #[test]
    fn mismatched_group_is_rejected() {
        let z12 = AbelianGroup::make_cyclic(12).unwrap();
        let g = AbelianGroup::make_product(&[5, 3, 3]).unwrap();
        let a = z12.element(&[7]).unwrap();
        let b = g.element(&[1, 2, 1]).unwrap();
        assert!(matches!(z12.add(&a, &b), Err(Error::Domain(_))));
        // same width, out-of-range coordinate
        let z5 = AbelianGroup::make_cyclic(5).unwrap();
        assert!(z5.add(&a, &a).is_err());
    }

    /// Brute-force order by repeated addition; the implementation uses the
    /// per-coordinate lcm formula.
    fn order_by_repeated_addition(g: &AbelianGroup, x: &GroupElement) -> u64 {
        let mut acc = x.clone();
        let mut m = 1u64;
        while acc != g.zero() {
            acc = g.add(&acc, x).unwrap();
            m += 1;
        }
        m
    }

    #[test]
    fn element_orders() {
        let z12 = AbelianGroup::make_cyclic(12).unwrap();
        assert_eq!(z12.element_order(&z12.element(&[6]).unwrap()).unwrap(), 2);
        assert_eq!(z12.element_order(&z12.zero()).unwrap(), 1);
        let z7 = AbelianGroup::make_cyclic(7).unwrap();
        let three = z7.element(&[3]).unwrap();
        assert_eq!(z7.element_order(&three).unwrap(), 7);
        assert_eq!(order_by_repeated_addition(&z7, &three), 7);
    }

    #[test]
    fn element_order_divides_group_order_exhaustively() {
        for g in [
            AbelianGroup::make_cyclic(10_000).unwrap(),
            AbelianGroup::make_product(&[5, 3, 3]).unwrap(),
            AbelianGroup::make_product(&[25, 5]).unwrap(),
            AbelianGroup::make_cyclic(1001).unwrap(),
        ] {
            for x in g.elements() {
                let ord = g.element_order(&x).unwrap();
                assert_eq!(g.order() % ord, 0, "order {ord} in {:?}", g.moduli());
                assert_eq!(ord, order_by_repeated_addition(&g, &x));
            }
        }
    }

    #[test]
    fn small_order_detection() {
        assert!(AbelianGroup::make_cyclic(175).unwrap().forbids_small_orders());
        assert!(!AbelianGroup::make_cyclic(45).unwrap().forbids_small_orders());
        assert!(AbelianGroup::make_cyclic(1001).unwrap().forbids_small_orders());

        // gcd test agrees with an exhaustive order scan
        for g in [
            AbelianGroup::make_cyclic(175).unwrap(),
            AbelianGroup::make_cyclic(45).unwrap(),
            AbelianGroup::make_cyclic(1001).unwrap(),
            AbelianGroup::make_product(&[5, 7]).unwrap(),
            AbelianGroup::make_product(&[3, 3]).unwrap(),
        ] {
            let scan = g
                .elements()
                .all(|x| !matches!(g.element_order(&x).unwrap(), 2 | 3));
            assert_eq!(g.forbids_small_orders(), scan, "order {}", g.order());
        }
    }

    #[test]
    fn rank_roundtrip_last_coordinate_fastest() {
        let g = AbelianGroup::make_product(&[5, 3, 3]).unwrap();
        assert_eq!(g.rank_of(&g.element(&[0, 0, 1]).unwrap()).unwrap(), 1);
        assert_eq!(g.rank_of(&g.element(&[0, 1, 0]).unwrap()).unwrap(), 3);
        assert_eq!(g.rank_of(&g.element(&[1, 0, 0]).unwrap()).unwrap(), 9);
        for r in 0..g.order() {
            assert_eq!(g.rank_of(&g.element_at(r).unwrap()).unwrap(), r);
        }
    }

    #[test]
    fn field_construction() {
        let f9 = FiniteField::make(3, 2).unwrap();
        assert_eq!(f9.order(), 9);
        // first irreducible in lexicographic coefficient order is x^2 + 1
        assert_eq!(f9.modulus(), &[1, 0, 1]);

        let f25 = FiniteField::make(5, 2).unwrap();
        assert_eq!(f25.order(), 25);
        // x^2 + 1 has roots 2, 3 mod 5; the first root-free choice is x^2 + 2
        assert_eq!(f25.modulus(), &[2, 0, 1]);

        assert!(matches!(
            FiniteField::make(4, 2),
            Err(Error::InvalidCharacteristic(_))
        ));
        assert!(FiniteField::make(2, 2).is_err());
    }

    #[test]
    fn modulus_is_root_free() {
        // re-check of the stored polynomial via the no-root oracle
        for (p, k) in [(3u64, 2usize), (5, 2), (7, 2), (11, 2)] {
            let f = FiniteField::make(p, k).unwrap();
            for c in 0..p {
                assert_ne!(poly_eval(f.modulus(), c, p), 0);
            }
        }
    }

    #[test]
    fn field_multiplication() {
        let f9 = FiniteField::make(3, 2).unwrap();
        let x = f9.additive_group().element(&[0, 1]).unwrap();
        // x * x = x^2 = -1 = 2 under modulus x^2 + 1
        assert_eq!(f9.mul(&x, &x).unwrap().coords(), &[2, 0]);
        for a in f9.elements() {
            if a != f9.zero() {
                assert_eq!(f9.pow(&a, 0).unwrap(), f9.one());
            }
        }
    }

    #[test]
    fn norm_one_count_in_gf9() {
        let f9 = FiniteField::make(3, 2).unwrap();
        let count = f9
            .elements()
            .filter(|s| *s != f9.zero() && f9.pow(s, 4).unwrap() == f9.one())
            .count();
        assert_eq!(count, 4);
    }

    #[test]
    fn multiplicative_group_is_cyclic_of_full_order() {
        // x^{p^k - 1} = 1 for every nonzero x, in all fields of order <= 10^4
        for (p, k) in [(3u64, 2usize), (5, 2), (7, 2), (11, 2), (3, 4), (5, 4), (3, 6)] {
            let f = FiniteField::make(p, k).unwrap();
            let e = f.order() - 1;
            for a in f.elements() {
                if a == f.zero() {
                    continue;
                }
                assert_eq!(f.pow(&a, e).unwrap(), f.one(), "GF({p}^{k}) element {a}");
            }
        }
    }

    #[test]
    fn primality_by_trial_division() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(is_prime(999_983));
        assert!(!is_prime(999_981));
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn group_and_elements() -> impl Strategy<Value = (AbelianGroup, Vec<GroupElement>)> {
            proptest::collection::vec(2u64..20, 1..4).prop_flat_map(|moduli| {
                let g = AbelianGroup::make_product(&moduli).unwrap();
                let order = g.order();
                proptest::collection::vec(0..order, 3).prop_map(move |ranks| {
                    let elems = ranks.iter().map(|&r| g.element_at(r).unwrap()).collect();
                    (g.clone(), elems)
                })
            })
        }

        proptest! {
            #[test]
            fn addition_is_commutative_and_associative((g, e) in group_and_elements()) {
                let (a, b, c) = (&e[0], &e[1], &e[2]);
                prop_assert_eq!(g.add(a, b).unwrap(), g.add(b, a).unwrap());
                let ab_c = g.add(&g.add(a, b).unwrap(), c).unwrap();
                let a_bc = g.add(a, &g.add(b, c).unwrap()).unwrap();
                prop_assert_eq!(ab_c, a_bc);
            }

            #[test]
            fn negation_is_involutive((g, e) in group_and_elements()) {
                let a = &e[0];
                prop_assert_eq!(&g.neg(&g.neg(a).unwrap()).unwrap(), a);
                prop_assert_eq!(g.add(a, &g.neg(a).unwrap()).unwrap(), g.zero());
            }

            #[test]
            fn element_order_divides_group_order((g, e) in group_and_elements()) {
                let ord = g.element_order(&e[0]).unwrap();
                prop_assert_eq!(g.order() % ord, 0);
            }
        }
    }
}
