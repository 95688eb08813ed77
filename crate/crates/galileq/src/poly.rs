//! Multivariate Laurent polynomials over the Gaussian rationals.
//!
//! Indeterminates are interned in a process-global registry, so a `Var` is
//! just an index and monomials are sorted exponent vectors. Exponents may be
//! negative (m⁻¹ and contraction-parameter bookkeeping both need it); with
//! no zero divisors in the coefficient field, all ring identities still hold.

use crate::scalar::Gaussian;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Var(pub u32);

fn registry() -> &'static RwLock<Vec<String>> {
    static REG: OnceLock<RwLock<Vec<String>>> = OnceLock::new();
    REG.get_or_init(|| RwLock::new(Vec::new()))
}

/// Interns `name` and returns its variable id.
pub fn var(name: &str) -> Var {
    {
        let reg = registry().read().unwrap();
        if let Some(idx) = reg.iter().position(|s| s == name) {
            return Var(idx as u32);
        }
    }
    let mut reg = registry().write().unwrap();
    if let Some(idx) = reg.iter().position(|s| s == name) {
        return Var(idx as u32);
    }
    reg.push(name.to_string());
    Var((reg.len() - 1) as u32)
}

pub fn var_name(v: Var) -> String {
    registry().read().unwrap()[v.0 as usize].clone()
}

/// Sorted (var, exponent) pairs, exponents nonzero.
pub type Mono = Vec<(Var, i32)>;

fn mono_mul(a: &Mono, b: &Mono) -> Mono {
    let mut out: Mono = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let e = a[i].1 + b[j].1;
                if e != 0 {
                    out.push((a[i].0, e));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// A polynomial (Laurent in general) with Gaussian-rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    terms: BTreeMap<Mono, Gaussian>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Gaussian::one())
    }

    pub fn constant(c: Gaussian) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        Poly { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Poly::constant(Gaussian::from_int(n))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Poly::constant(Gaussian::ratio(n, d))
    }

    pub fn i() -> Self {
        Poly::constant(Gaussian::i())
    }

    pub fn var(v: Var) -> Self {
        Poly::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: i32) -> Self {
        if e == 0 {
            return Poly::one();
        }
        let mut terms = BTreeMap::new();
        terms.insert(vec![(v, e)], Gaussian::one());
        Poly { terms }
    }

    pub fn monomial(c: Gaussian, m: Mono) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_empty())
    }

    pub fn as_constant(&self) -> Option<Gaussian> {
        if self.terms.is_empty() {
            Some(Gaussian::zero())
        } else if self.is_constant() {
            Some(self.terms.values().next().unwrap().clone())
        } else {
            None
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Gaussian)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, m: Mono, c: Gaussian) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                out.add_term(mono_mul(ma, mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Gaussian) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Conjugates coefficients; indeterminates are treated as real.
    pub fn conj(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.conj())).collect(),
        }
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut out: Vec<Var> = Vec::new();
        for m in self.terms.keys() {
            for (v, _) in m {
                if !out.contains(v) {
                    out.push(*v);
                }
            }
        }
        out.sort();
        out
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.iter().any(|(w, _)| *w == v))
    }

    pub fn degree_in(&self, v: Var) -> i32 {
        self.terms
            .keys()
            .map(|m| m.iter().find(|(w, _)| *w == v).map_or(0, |(_, e)| *e))
            .max()
            .unwrap_or(0)
    }

    pub fn min_degree_in(&self, v: Var) -> i32 {
        self.terms
            .keys()
            .map(|m| m.iter().find(|(w, _)| *w == v).map_or(0, |(_, e)| *e))
            .min()
            .unwrap_or(0)
    }

    /// Coefficient of v^k, a polynomial in the remaining indeterminates.
    pub fn coeff_of(&self, v: Var, k: i32) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.iter().find(|(w, _)| *w == v).map_or(0, |(_, e)| *e);
            if e == k {
                let rest: Mono = m.iter().copied().filter(|(w, _)| *w != v).collect();
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    /// Substitutes a polynomial for `v`. Negative powers of `v` require the
    /// replacement to be a single invertible term.
    pub fn subst(&self, v: Var, rep: &Poly) -> Poly {
        let mut out = Poly::zero();
        let mut pow_cache: BTreeMap<i32, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.iter().find(|(w, _)| *w == v).map_or(0, |(_, e)| *e);
            let rest: Mono = m.iter().copied().filter(|(w, _)| *w != v).collect();
            let factor = pow_cache
                .entry(e)
                .or_insert_with(|| {
                    if e >= 0 {
                        rep.pow(e as u32)
                    } else {
                        assert_eq!(rep.terms.len(), 1, "negative power substitution needs a monomial");
                        let (m0, c0) = rep.terms.iter().next().unwrap();
                        let inv_mono: Mono = m0.iter().map(|(w, k)| (*w, -k)).collect();
                        Poly::monomial(c0.inv(), inv_mono).pow((-e) as u32)
                    }
                })
                .clone();
            out = out.add(&factor.mul(&Poly::monomial(c.clone(), rest)));
        }
        out
    }

    pub fn subst_gauss(&self, v: Var, value: &Gaussian) -> Poly {
        self.subst(v, &Poly::constant(value.clone()))
    }

    /// Evaluates with every remaining indeterminate assigned; None if a
    /// variable is missing from the assignment.
    pub fn eval(&self, assign: &BTreeMap<Var, Gaussian>) -> Option<Gaussian> {
        let mut acc = Gaussian::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m {
                let val = assign.get(v)?;
                if *e >= 0 {
                    for _ in 0..*e {
                        t = t * val.clone();
                    }
                } else {
                    let inv = val.inv();
                    for _ in 0..(-e) {
                        t = t * inv.clone();
                    }
                }
            }
            acc += t;
        }
        Some(acc)
    }

    /// Exact division; None if `self` is not a multiple of `d`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if let Some(c) = d.as_constant() {
            return Some(self.scale(&c.inv()));
        }
        // main variable: the largest var id appearing in d
        let v = *d.vars().last().unwrap();
        // clear Laurent offsets in v
        let sp = self.min_degree_in(v).min(0);
        let sd = d.min_degree_in(v).min(0);
        let p = self.mul(&Poly::var_pow(v, -sp));
        let dd = d.mul(&Poly::var_pow(v, -sd));
        let deg_d = dd.degree_in(v);
        let lead_d = dd.coeff_of(v, deg_d);
        let mut rem = p;
        let mut quo = Poly::zero();
        while !rem.is_zero() {
            let deg_r = rem.degree_in(v);
            if deg_r < deg_d {
                return None;
            }
            let lead_r = rem.coeff_of(v, deg_r);
            let q = lead_r.div_exact(&lead_d)?;
            let shift = q.mul(&Poly::var_pow(v, deg_r - deg_d));
            quo = quo.add(&shift);
            rem = rem.sub(&shift.mul(&dd));
            if !rem.is_zero() && rem.degree_in(v) >= deg_r {
                return None; // no progress: lead did not cancel
            }
        }
        // undo the Laurent normalization: self/d = quo * v^(sp - sd)
        Some(quo.mul(&Poly::var_pow(v, sp - sd)))
    }

    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (m, c) in &self.terms {
            let mono = m
                .iter()
                .map(|(v, e)| {
                    if *e == 1 {
                        var_name(*v)
                    } else {
                        format!("{}^{}", var_name(*v), e)
                    }
                })
                .collect::<Vec<_>>()
                .join("*");
            let cs = c.to_exact_string();
            let piece = if mono.is_empty() {
                cs
            } else if cs == "1" {
                mono
            } else if cs == "-1" {
                format!("-{mono}")
            } else if c.is_real() || c.re.is_zero() {
                format!("{cs}*{mono}")
            } else {
                format!("({cs})*{mono}")
            };
            parts.push(piece);
        }
        let mut s = String::new();
        for (i, p) in parts.iter().enumerate() {
            if i == 0 {
                s.push_str(p);
            } else if let Some(stripped) = p.strip_prefix('-') {
                s.push_str(" - ");
                s.push_str(stripped);
            } else {
                s.push_str(" + ");
                s.push_str(p);
            }
        }
        s
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_basics() {
        let x = var("tx");
        let y = var("ty");
        let p = Poly::var(x).add(&Poly::var(y));
        let q = Poly::var(x).sub(&Poly::var(y));
        let prod = p.mul(&q);
        let expect = Poly::var_pow(x, 2).sub(&Poly::var_pow(y, 2));
        assert_eq!(prod, expect);
    }

    #[test]
    fn exact_division() {
        let x = var("tx");
        let y = var("ty");
        let d = Poly::var(x).add(&Poly::var_pow(y, 2));
        let q = Poly::var(x).sub(&Poly::from_int(3));
        let p = d.mul(&q);
        assert_eq!(p.div_exact(&d).unwrap(), q);
        assert!(p.add(&Poly::one()).div_exact(&d).is_none());
    }

    #[test]
    fn laurent_division_and_subst() {
        let m = var("tm");
        let p = Poly::var_pow(m, -2).mul(&Poly::from_int(4));
        let d = Poly::var_pow(m, -1).mul(&Poly::from_int(2));
        assert_eq!(p.div_exact(&d).unwrap(), d);
        let s = p.subst_gauss(m, &Gaussian::from_int(2));
        assert_eq!(s.as_constant().unwrap(), Gaussian::from_int(1));
    }
}
