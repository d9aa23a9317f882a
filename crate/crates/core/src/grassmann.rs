//! Finite Grassmann algebras `Λ[ξ1..ξq]` over the Gaussian rationals.
//!
//! A monomial `ξ_{i1} ξ_{i2} ... ξ_{ik}` with `i1 < i2 < ... < ik` is stored as a
//! bitmask with bit `i - 1` set for each factor. Every [`SuperNumber`] keeps its
//! terms in canonical form: ascending factor order, no zero coefficients.
//!
//! Complex conjugation acts through a pairing of the generators (`ξ_k ↔ ξ̄_k`,
//! where `ξ̄_k` is just another generator of the same algebra). Conjugating a
//! product maps factors in place, without reversing their order:
//! `conj(θ ξ) = θ̄ ξ̄`. This makes [`SuperNumber::bar`] a ring automorphism
//! (antilinear) rather than the anti-automorphism used in much of the physics
//! literature.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::GaussianRational;

/// Largest supported number of generators (masks are `u64`).
pub const MAX_GENERATORS: usize = 62;

/// The algebra `Λ[ξ1..ξq]` together with its conjugation pairing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GrassmannAlgebra {
    q: usize,
    // 0-based involution on {0..q}
    pairing: Vec<usize>,
}

impl GrassmannAlgebra {
    /// Builds an algebra from a 1-based pairing (`pairing[k-1]` is the partner of `ξ_k`).
    pub fn new(q: usize, pairing: &[usize]) -> Result<Arc<Self>> {
        if q > MAX_GENERATORS {
            return Err(Error::InvalidAlgebra(format!("q = {q} exceeds {MAX_GENERATORS}")));
        }
        if pairing.len() != q {
            return Err(Error::InvalidAlgebra(format!(
                "pairing has {} entries, expected {q}",
                pairing.len()
            )));
        }
        let zero_based: Vec<usize> = pairing
            .iter()
            .map(|&p| {
                if p == 0 || p > q {
                    Err(Error::InvalidAlgebra(format!("pairing entry {p} outside 1..={q}")))
                } else {
                    Ok(p - 1)
                }
            })
            .collect::<Result<_>>()?;
        for (k, &p) in zero_based.iter().enumerate() {
            if zero_based[p] != k {
                return Err(Error::InvalidAlgebra("pairing is not an involution".into()));
            }
        }
        Ok(Arc::new(Self { q, pairing: zero_based }))
    }

    /// `q` generators, each its own conjugate.
    pub fn real(q: usize) -> Arc<Self> {
        let pairing: Vec<usize> = (1..=q).collect();
        Self::new(q, &pairing).expect("identity pairing is valid")
    }

    /// `2k` generators with `ξ_i ↔ ξ_{i+k}` for `i = 1..k`.
    pub fn paired(k: usize) -> Arc<Self> {
        let pairing: Vec<usize> = (1..=2 * k).map(|i| if i <= k { i + k } else { i - k }).collect();
        Self::new(2 * k, &pairing).expect("block pairing is valid")
    }

    /// The working algebra used throughout: four odd coordinates and their conjugates.
    pub fn default_working() -> Arc<Self> {
        Self::paired(4)
    }

    pub fn num_generators(&self) -> usize {
        self.q
    }

    /// 1-based partner of generator `k` (1-based).
    pub fn partner(&self, k: usize) -> usize {
        self.pairing[k - 1] + 1
    }

    /// The pairing in 1-based form, as serialized.
    pub fn pairing(&self) -> Vec<usize> {
        self.pairing.iter().map(|p| p + 1).collect()
    }

    /// Same algebra with `extra` additional self-conjugate generators appended.
    pub fn extended(&self, extra: usize) -> Result<Arc<Self>> {
        let mut pairing = self.pairing();
        pairing.extend(self.q + 1..=self.q + extra);
        Self::new(self.q + extra, &pairing)
    }

    /// True if every monomial of `self` is also a monomial of `other` with the same conjugate.
    pub fn embeds_into(&self, other: &Self) -> bool {
        self.q <= other.q && self.pairing[..] == other.pairing[..self.q]
    }

    fn map_mask(&self, mask: u64) -> (u64, bool) {
        // Apply the pairing factor by factor, then count inversions to re-sort.
        let mut images = Vec::with_capacity(mask.count_ones() as usize);
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            images.push(self.pairing[i]);
            m &= m - 1;
        }
        let mut inversions = 0usize;
        for a in 0..images.len() {
            for b in a + 1..images.len() {
                if images[a] > images[b] {
                    inversions += 1;
                }
            }
        }
        let out = images.iter().fold(0u64, |acc, &i| acc | (1 << i));
        (out, inversions % 2 == 1)
    }
}

/// Sign of `ξ_a ξ_b` relative to the canonical ordering of `a | b`;
/// `None` when the monomials share a generator.
/// Largest `q` for which products use a dense accumulator.
const DENSE_LIMIT: usize = 12;

pub(crate) fn merge_sign(a: u64, b: u64) -> Option<bool> {
    if a & b != 0 {
        return None;
    }
    let mut swaps = 0u32;
    let mut m = b;
    while m != 0 {
        let j = m.trailing_zeros();
        swaps += (a >> j >> 1).count_ones();
        m &= m - 1;
    }
    Some(swaps % 2 == 1)
}

/// Z2-grading of a supernumber.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
    Mixed,
}

impl Parity {
    pub fn from_bit(odd: bool) -> Self {
        if odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    /// 0 for even, 1 for odd, `None` for mixed.
    pub fn bit(self) -> Option<u8> {
        match self {
            Parity::Even => Some(0),
            Parity::Odd => Some(1),
            Parity::Mixed => None,
        }
    }
}

/// An element of a finite Grassmann algebra with Gaussian-rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct SuperNumber {
    alg: Arc<GrassmannAlgebra>,
    terms: BTreeMap<u64, GaussianRational>,
}

impl SuperNumber {
    pub fn zero(alg: &Arc<GrassmannAlgebra>) -> Self {
        Self { alg: alg.clone(), terms: BTreeMap::new() }
    }

    pub fn one(alg: &Arc<GrassmannAlgebra>) -> Self {
        Self::scalar(alg, GaussianRational::one())
    }

    pub fn scalar(alg: &Arc<GrassmannAlgebra>, c: GaussianRational) -> Self {
        Self::monomial(alg, 0, c)
    }

    pub fn from_int(alg: &Arc<GrassmannAlgebra>, n: i64) -> Self {
        Self::scalar(alg, GaussianRational::from_int(n))
    }

    /// The generator `ξ_k` (1-based).
    pub fn generator(alg: &Arc<GrassmannAlgebra>, k: usize) -> Result<Self> {
        if k == 0 || k > alg.q {
            return Err(Error::GeneratorOutOfRange { index: k, q: alg.q });
        }
        Ok(Self::monomial(alg, 1 << (k - 1), GaussianRational::one()))
    }

    /// `c · ξ_mask` for a canonical (ascending) mask.
    pub fn monomial(alg: &Arc<GrassmannAlgebra>, mask: u64, c: GaussianRational) -> Self {
        assert!(mask >> alg.q == 0, "mask uses generators beyond q = {}", alg.q);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mask, c);
        }
        Self { alg: alg.clone(), terms }
    }

    /// Builds from arbitrary `(mask, coefficient)` pairs, summing duplicates.
    pub fn from_terms<I>(alg: &Arc<GrassmannAlgebra>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, GaussianRational)>,
    {
        let mut out = Self::zero(alg);
        for (mask, c) in terms {
            if mask >> alg.q != 0 {
                return Err(Error::GeneratorOutOfRange {
                    index: 64 - mask.leading_zeros() as usize,
                    q: alg.q,
                });
            }
            out.add_term(mask, &c);
        }
        Ok(out)
    }

    pub fn algebra(&self) -> &Arc<GrassmannAlgebra> {
        &self.alg
    }

    /// Canonical terms, ascending by mask.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &GaussianRational)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, mask: u64) -> GaussianRational {
        self.terms.get(&mask).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// True if the element has no soul.
    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(|&m| m == 0)
    }

    fn add_term(&mut self, mask: u64, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(mask).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&mask);
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.alg, &other.alg) || self.alg == other.alg {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    /// Exterior product; terms sharing a generator vanish.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let q = self.alg.q;
        let pairs = self.terms.len() * other.terms.len();
        if q > DENSE_LIMIT || pairs < 64 {
            let mut out = Self::zero(&self.alg);
            for (ma, ca) in &self.terms {
                for (mb, cb) in &other.terms {
                    if let Some(neg) = merge_sign(*ma, *mb) {
                        let c = ca * cb;
                        out.add_term(ma | mb, &if neg { -c } else { c });
                    }
                }
            }
            return Ok(out);
        }
        // dense accumulation; for dense operands walk only the submasks of the
        // complement of each left monomial (3^q visits instead of 4^q)
        let full = (1u64 << q) - 1;
        let mut acc: Vec<Option<GaussianRational>> = vec![None; 1 << q];
        let mut push = |mask: u64, c: GaussianRational, neg: bool| {
            let slot = &mut acc[mask as usize];
            let c = if neg { -c } else { c };
            match slot {
                Some(v) => *v += &c,
                None => *slot = Some(c),
            }
        };
        if pairs > 3usize.pow(q as u32) {
            let mut dense_b: Vec<Option<&GaussianRational>> = vec![None; 1 << q];
            for (m, c) in &other.terms {
                dense_b[*m as usize] = Some(c);
            }
            for (ma, ca) in &self.terms {
                let comp = full & !ma;
                let mut sub = comp;
                loop {
                    if let Some(cb) = dense_b[sub as usize] {
                        let neg = merge_sign(*ma, sub).expect("disjoint");
                        push(ma | sub, ca * cb, neg);
                    }
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & comp;
                }
            }
        } else {
            for (ma, ca) in &self.terms {
                for (mb, cb) in &other.terms {
                    if let Some(neg) = merge_sign(*ma, *mb) {
                        push(ma | mb, ca * cb, neg);
                    }
                }
            }
        }
        let terms = acc
            .into_iter()
            .enumerate()
            .filter_map(|(m, c)| c.filter(|c| !c.is_zero()).map(|c| (m as u64, c)))
            .collect();
        Ok(Self { alg: self.alg.clone(), terms })
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.alg);
        }
        Self {
            alg: self.alg.clone(),
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn parity(&self) -> Parity {
        let mut even = false;
        let mut odd = false;
        for m in self.terms.keys() {
            if m.count_ones() % 2 == 0 {
                even = true;
            } else {
                odd = true;
            }
        }
        match (even, odd) {
            (_, false) => Parity::Even,
            (false, true) => Parity::Odd,
            (true, true) => Parity::Mixed,
        }
    }

    /// Projection onto the even (`odd = false`) or odd part.
    pub fn graded_part(&self, odd: bool) -> Self {
        Self {
            alg: self.alg.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| (m.count_ones() % 2 == 1) == odd)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn body(&self) -> GaussianRational {
        self.coefficient(0)
    }

    pub fn soul(&self) -> Self {
        let mut s = self.clone();
        s.terms.remove(&0);
        s
    }

    pub fn body_soul(&self) -> (GaussianRational, Self) {
        (self.body(), self.soul())
    }

    /// Exact inverse through the terminating series `b⁻¹ Σ (−s/b)^k`.
    pub fn invert(&self) -> Result<Self> {
        let (body, soul) = self.body_soul();
        let binv = body
            .inv()
            .map_err(|_| Error::NotInvertible("supernumber with zero body".into()))?;
        let step = soul.scale(&-&binv);
        let mut term = Self::one(&self.alg);
        let mut sum = Self::one(&self.alg);
        loop {
            term = &term * &step;
            if term.is_zero() {
                break;
            }
            sum = &sum + &term;
        }
        Ok(sum.scale(&binv))
    }

    /// Conjugation: coefficients conjugated, generators mapped through the pairing
    /// in place, then re-sorted.
    pub fn bar(&self) -> Self {
        let mut out = Self::zero(&self.alg);
        for (m, c) in &self.terms {
            let (image, neg) = self.alg.map_mask(*m);
            let c = c.conj();
            out.add_term(image, &if neg { -c } else { c });
        }
        out
    }

    /// Re-homes the element in a larger algebra that extends this one.
    pub fn lift(&self, target: &Arc<GrassmannAlgebra>) -> Result<Self> {
        if !self.alg.embeds_into(target) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Self { alg: target.clone(), terms: self.terms.clone() })
    }

    /// Splits `self = a + b · ξ_factor` where no term of `a` or `b` contains any
    /// generator of `factor`, and `factor` consists of the highest generators of
    /// the algebra. Returns `(a, b)` re-homed in `base`.
    pub fn split_highest(&self, factor: u64, base: &Arc<GrassmannAlgebra>) -> Result<(Self, Self)> {
        if !base.embeds_into(&self.alg) || factor >> base.q << base.q != factor {
            return Err(Error::AlgebraMismatch);
        }
        let mut a = Self::zero(base);
        let mut b = Self::zero(base);
        for (m, c) in &self.terms {
            let rest = m & !factor;
            if m & factor == 0 {
                a.add_term(*m, c);
            } else if m & factor == factor {
                // factor generators sit above every base generator, so no reordering sign
                b.add_term(rest, c);
            } else if rest >> base.q == 0 {
                return Err(Error::AlgebraMismatch);
            }
        }
        Ok((a, b))
    }

    /// `self^k`.
    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(&self.alg), |acc, _| &acc * self)
    }
}

impl fmt::Debug for SuperNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Renders in the expression syntax: `3 + 2*x1*x2 - (1/2 + 1i)*x3`.
impl fmt::Display for SuperNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let negative_real = c.is_real() && c.re_rational().is_negative();
            let shown = if negative_real { -c } else { c.clone() };
            if idx == 0 {
                if negative_real {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative_real { '-' } else { '+' })?;
            }
            let gens: Vec<String> = (0..self.alg.q)
                .filter(|i| m >> i & 1 == 1)
                .map(|i| format!("x{}", i + 1))
                .collect();
            if gens.is_empty() {
                write!(f, "{shown}")?;
            } else if shown.is_one() {
                write!(f, "{}", gens.join("*"))?;
            } else {
                write!(f, "{shown}*{}", gens.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Add for &SuperNumber {
    type Output = SuperNumber;
    /// Panics on algebra mismatch; see [`SuperNumber::try_add`].
    fn add(self, rhs: &SuperNumber) -> SuperNumber {
        self.try_add(rhs).expect("supernumber algebra mismatch")
    }
}

impl Sub for &SuperNumber {
    type Output = SuperNumber;
    fn sub(self, rhs: &SuperNumber) -> SuperNumber {
        self.try_sub(rhs).expect("supernumber algebra mismatch")
    }
}

impl Mul for &SuperNumber {
    type Output = SuperNumber;
    fn mul(self, rhs: &SuperNumber) -> SuperNumber {
        self.try_mul(rhs).expect("supernumber algebra mismatch")
    }
}

impl Neg for &SuperNumber {
    type Output = SuperNumber;
    fn neg(self) -> SuperNumber {
        SuperNumber {
            alg: self.alg.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for SuperNumber {
    type Output = SuperNumber;
    fn neg(self) -> SuperNumber {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for SuperNumber {
            type Output = SuperNumber;
            fn $m(self, rhs: SuperNumber) -> SuperNumber {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&SuperNumber> for SuperNumber {
            type Output = SuperNumber;
            fn $m(self, rhs: &SuperNumber) -> SuperNumber {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);
