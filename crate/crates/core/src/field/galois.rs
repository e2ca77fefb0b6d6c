use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use super::{is_prime, Field, FieldError};

/// Largest extension field that gets log/exp tables.
pub const MAX_FIELD_ORDER: u64 = 1 << 22;

/// GF(p^k). Elements are indices `c0 + c1 p + ... + c_{k-1} p^{k-1}` of the
/// coefficient vector of `c0 + c1 w + ...`, so numeric order on indices is
/// the lexicographic order on coefficient vectors read from the top degree.
#[derive(Clone)]
pub struct GaloisField(Arc<Inner>);

struct Inner {
    p: u32,
    k: u32,
    q: u32,
    /// Monic, constant term first; `[0, 1]` for prime fields.
    modulus: Vec<u32>,
    default_modulus: bool,
    /// `exp[i] = g^i` for `i < 2(q-1)`; extension fields only.
    exp: Vec<u32>,
    log: Vec<u32>,
}

type Registry = Mutex<HashMap<(u32, Vec<u32>), GaloisField>>;

fn registry() -> &'static Registry {
    static R: OnceLock<Registry> = OnceLock::new();
    R.get_or_init(Default::default)
}

fn defaults() -> &'static Mutex<HashMap<(u32, u32), GaloisField>> {
    static D: OnceLock<Mutex<HashMap<(u32, u32), GaloisField>>> = OnceLock::new();
    D.get_or_init(Default::default)
}

impl GaloisField {
    /// GF(p^k) with the lexicographically smallest monic irreducible modulus.
    pub fn new(p: u64, k: u32) -> Result<Self, FieldError> {
        let p32 = check_characteristic(p)?;
        if k == 0 {
            return Err(FieldError::BadModulus(vec![], 0));
        }
        if let Some(f) = defaults().lock().unwrap().get(&(p32, k)) {
            return Ok(f.clone());
        }
        check_order(p32, k)?;
        let modulus = if k == 1 { vec![0, 1] } else { smallest_irreducible(p32, k) };
        let f = Self::build(p32, modulus, true)?;
        defaults().lock().unwrap().insert((p32, k), f.clone());
        Ok(f)
    }

    pub fn prime(p: u64) -> Result<Self, FieldError> {
        Self::new(p, 1)
    }

    /// GF(p)[w]/(modulus); `modulus` is constant term first and must be monic
    /// and irreducible.
    pub fn with_modulus(p: u64, modulus: &[u32]) -> Result<Self, FieldError> {
        let p32 = check_characteristic(p)?;
        let reduced: Vec<u32> = modulus.iter().map(|c| c % p32).collect();
        let k = reduced.len().saturating_sub(1) as u32;
        if k == 0 || reduced[k as usize] != 1 {
            return Err(FieldError::BadModulus(modulus.to_vec(), k));
        }
        if k == 1 {
            return Self::new(p, 1);
        }
        check_order(p32, k)?;
        if !is_irreducible(p32, &reduced) {
            return Err(FieldError::BadModulus(modulus.to_vec(), k));
        }
        let default = smallest_irreducible(p32, k) == reduced;
        Self::build(p32, reduced, default)
    }

    fn build(p: u32, modulus: Vec<u32>, default_modulus: bool) -> Result<Self, FieldError> {
        let key = (p, modulus.clone());
        let mut reg = registry().lock().unwrap();
        if let Some(f) = reg.get(&key) {
            return Ok(f.clone());
        }
        let k = (modulus.len() - 1) as u32;
        let q = p.pow(k);
        let (exp, log) = if k == 1 { (vec![], vec![]) } else { log_tables(p, k, &modulus) };
        let f = GaloisField(Arc::new(Inner { p, k, q, modulus, default_modulus, exp, log }));
        reg.insert(key, f.clone());
        Ok(f)
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.k
    }

    pub fn size(&self) -> u32 {
        self.0.q
    }

    /// `None` for prime fields.
    pub fn modulus(&self) -> Option<&[u32]> {
        (self.0.k > 1).then_some(self.0.modulus.as_slice())
    }

    /// Cache key identifying the field up to equality.
    pub fn key(&self) -> (u32, Vec<u32>) {
        (self.0.p, self.0.modulus.clone())
    }

    /// The class of `w`; for prime fields this is 1.
    pub fn generator(&self) -> u32 {
        if self.0.k == 1 {
            1
        } else {
            self.0.p
        }
    }

    /// Base-p digits of an element, constant coefficient first.
    pub fn digits(&self, mut a: u32) -> Vec<u32> {
        let mut d = Vec::with_capacity(self.0.k as usize);
        for _ in 0..self.0.k {
            d.push(a % self.0.p);
            a /= self.0.p;
        }
        d
    }

    pub fn from_digits(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.0.p + d % self.0.p)
    }

    fn fmt_spec(&self) -> String {
        let Inner { p, k, .. } = *self.0;
        if k == 1 {
            format!("gf({p})")
        } else if self.0.default_modulus {
            format!("gf({p},{k})")
        } else {
            let m: Vec<String> = self.0.modulus.iter().map(u32::to_string).collect();
            format!("gf({p},{k};{})", m.join(","))
        }
    }

    fn eval(&self, coeffs: &[u32], x: u32) -> u32 {
        coeffs.iter().rev().fold(0, |acc, c| self.add(&self.mul(&acc, &x), c))
    }
}

fn check_characteristic(p: u64) -> Result<u32, FieldError> {
    if !is_prime(p) {
        return Err(FieldError::NonPrimeCharacteristic(p));
    }
    u32::try_from(p)
        .ok()
        .filter(|&p| p < (1 << 31))
        .ok_or(FieldError::FieldTooLarge(p as u128))
}

fn check_order(p: u32, k: u32) -> Result<(), FieldError> {
    if k == 1 {
        return Ok(());
    }
    let q = (p as u128).checked_pow(k).unwrap_or(u128::MAX);
    if q > MAX_FIELD_ORDER as u128 {
        return Err(FieldError::FieldTooLarge(q));
    }
    Ok(())
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for GaloisField {}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_spec())
    }
}

impl fmt::Display for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_spec())
    }
}

impl Field for GaloisField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        1
    }

    fn add(&self, a: &u32, b: &u32) -> u32 {
        let Inner { p, k, .. } = *self.0;
        if k == 1 {
            return ((*a as u64 + *b as u64) % p as u64) as u32;
        }
        if p == 2 {
            return a ^ b;
        }
        let (mut a, mut b, mut pw, mut out) = (*a, *b, 1u32, 0u32);
        for _ in 0..k {
            out += ((a % p + b % p) % p) * pw;
            a /= p;
            b /= p;
            pw = pw.wrapping_mul(p);
        }
        out
    }

    fn neg(&self, a: &u32) -> u32 {
        let Inner { p, k, .. } = *self.0;
        if k == 1 {
            return (p - a % p) % p;
        }
        if p == 2 {
            return *a;
        }
        let (mut a, mut pw, mut out) = (*a, 1u32, 0u32);
        for _ in 0..k {
            out += ((p - a % p) % p) * pw;
            a /= p;
            pw = pw.wrapping_mul(p);
        }
        out
    }

    fn mul(&self, a: &u32, b: &u32) -> u32 {
        let inner = &*self.0;
        if inner.k == 1 {
            return ((*a as u64 * *b as u64) % inner.p as u64) as u32;
        }
        if *a == 0 || *b == 0 {
            return 0;
        }
        inner.exp[(inner.log[*a as usize] + inner.log[*b as usize]) as usize]
    }

    fn inv(&self, a: &u32) -> Result<u32, FieldError> {
        if *a == 0 {
            return Err(FieldError::DivisionByZero);
        }
        let inner = &*self.0;
        if inner.k == 1 {
            return Ok(self.pow(a, inner.p as u64 - 2));
        }
        let n = inner.q - 1;
        Ok(inner.exp[((n - inner.log[*a as usize]) % n) as usize])
    }

    fn from_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.0.p as i64) as u32
    }

    fn characteristic(&self) -> u64 {
        self.0.p as u64
    }

    fn order(&self) -> Option<u64> {
        Some(self.0.q as u64)
    }

    fn elements(&self) -> Result<Vec<u32>, FieldError> {
        if self.0.q as u64 > MAX_FIELD_ORDER {
            return Err(FieldError::FieldTooLarge(self.0.q as u128));
        }
        Ok((0..self.0.q).collect())
    }

    fn roots_of(&self, coeffs: &[u32]) -> Vec<u32> {
        let deg = coeffs.iter().rposition(|c| *c != 0).unwrap_or(0);
        match deg {
            0 => vec![],
            1 => {
                let r = self.neg(&self.div(&coeffs[0], &coeffs[1]).expect("nonzero leading"));
                vec![r]
            }
            _ => (0..self.0.q).filter(|&x| self.eval(&coeffs[..=deg], x) == 0).collect(),
        }
    }

    fn format_elem(&self, a: &u32) -> String {
        if self.0.k == 1 {
            return a.to_string();
        }
        let terms: Vec<String> = self
            .digits(*a)
            .into_iter()
            .enumerate()
            .filter(|(_, c)| *c != 0)
            .map(|(i, c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "w".to_string(),
                (1, c) => format!("{c}*w"),
                (i, 1) => format!("w^{i}"),
                (i, c) => format!("{c}*w^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        }
    }

    fn parse_elem(&self, s: &str) -> Result<u32, FieldError> {
        let mut acc = 0u32;
        for (negative, term) in split_terms(s).ok_or_else(|| FieldError::parse("element", s))? {
            let v = self.parse_term(&term).ok_or_else(|| FieldError::parse("element", s))?;
            acc = if negative { self.sub(&acc, &v) } else { self.add(&acc, &v) };
        }
        Ok(acc)
    }

    fn spec(&self) -> String {
        self.fmt_spec()
    }
}

impl GaloisField {
    fn parse_term(&self, term: &str) -> Option<u32> {
        let (coef, power) = match term.split_once('w') {
            None => (term, 0u64),
            Some((c, rest)) => {
                if self.0.k == 1 {
                    return None;
                }
                let c = c.strip_suffix('*').unwrap_or(c);
                let e = match rest {
                    "" => 1,
                    r => r.strip_prefix('^')?.parse().ok()?,
                };
                (c, e)
            }
        };
        let c = if coef.is_empty() {
            1
        } else {
            let (n, d) = match coef.split_once('/') {
                Some((n, d)) => (n.parse::<i64>().ok()?, d.parse::<i64>().ok()?),
                None => (coef.parse::<i64>().ok()?, 1),
            };
            self.div(&self.from_i64(n), &self.from_i64(d)).ok()?
        };
        Some(self.mul(&c, &self.pow(&self.generator(), power)))
    }
}

/// Splits `a+b-c` into signed terms; `None` on an empty term.
pub(crate) fn split_terms(s: &str) -> Option<Vec<(bool, String)>> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = Vec::new();
    let mut negative = false;
    let mut buf = String::new();
    let mut prev = None;
    for ch in s.chars() {
        // a sign directly after '/' or '^' belongs to the number
        let glued = matches!(prev, Some('/') | Some('^'));
        if (ch == '+' || ch == '-') && !glued {
            if !buf.is_empty() {
                out.push((negative, std::mem::take(&mut buf)));
                negative = false;
            }
            if ch == '-' {
                negative = !negative;
            }
        } else {
            buf.push(ch);
        }
        prev = Some(ch);
    }
    if buf.is_empty() {
        return None;
    }
    out.push((negative, buf));
    Some(out)
}

// Arithmetic on coefficient vectors over GF(p), used only while building
// fields.

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    let dm = m.len() - 1;
    let lead_inv = mod_pow(m[dm] as u64, p as u64 - 2, p as u64);
    while r.len() > dm {
        let top = r.pop().unwrap() % p as u64;
        if top == 0 {
            continue;
        }
        let f = top * lead_inv % p as u64;
        let off = r.len() - dm;
        for (i, &c) in m[..dm].iter().enumerate() {
            let sub = f * c as u64 % p as u64;
            r[off + i] = (r[off + i] + p as u64 - sub) % p as u64;
        }
    }
    r.into_iter().map(|c| (c % p as u64) as u32).collect()
}

fn poly_mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let prod: Vec<u32> = prod.into_iter().map(|c| c as u32).collect();
    let mut r = poly_rem(&prod, m, p);
    r.resize(m.len() - 1, 0);
    r
}

fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

fn digits_of(mut idx: u64, p: u32, len: u32) -> Vec<u32> {
    (0..len)
        .map(|_| {
            let d = (idx % p as u64) as u32;
            idx /= p as u64;
            d
        })
        .collect()
}

fn is_irreducible(p: u32, m: &[u32]) -> bool {
    let k = (m.len() - 1) as u32;
    if m[0] == 0 {
        return false;
    }
    for d in 1..=k / 2 {
        for idx in 0..(p as u64).pow(d) {
            let mut g = digits_of(idx, p, d);
            g.push(1);
            if poly_rem(m, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible(p: u32, k: u32) -> Vec<u32> {
    (0..(p as u64).pow(k))
        .map(|idx| {
            let mut m = digits_of(idx, p, k);
            m.push(1);
            m
        })
        .find(|m| is_irreducible(p, m))
        .expect("irreducible polynomials exist in every degree")
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn log_tables(p: u32, k: u32, m: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let q = p.pow(k);
    let n = (q - 1) as u64;
    let one = digits_of(1, p, k);
    let pow = |g: &[u32], mut e: u64| {
        let mut base = g.to_vec();
        let mut acc = one.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = poly_mulmod(&acc, &base, m, p);
            }
            base = poly_mulmod(&base, &base, m, p);
            e >>= 1;
        }
        acc
    };
    let factors = prime_factors(n);
    let g = (2..q as u64)
        .map(|idx| digits_of(idx, p, k))
        .find(|g| factors.iter().all(|r| pow(g, n / r) != one))
        .expect("multiplicative group is cyclic");
    let to_idx = |d: &[u32]| d.iter().rev().fold(0u32, |acc, &c| acc * p + c);
    let mut exp = Vec::with_capacity(2 * n as usize);
    let mut log = vec![0u32; q as usize];
    let mut cur = one.clone();
    for i in 0..n as u32 {
        let idx = to_idx(&cur);
        exp.push(idx);
        log[idx as usize] = i;
        cur = poly_mulmod(&cur, &g, m, p);
    }
    exp.extend_from_within(..);
    (exp, log)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_modulus_and_inverse() {
        let f = GaloisField::new(2, 2).unwrap();
        assert_eq!(f.modulus(), Some(&[1, 1, 1][..]));
        let w = f.generator();
        assert_eq!(f.inv(&w).unwrap(), f.add(&w, &1));
        assert_eq!(f.elements().unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(f.format_elem(&3), "1+w");
    }

    #[test]
    fn prime_field_inverse() {
        let f = GaloisField::prime(11).unwrap();
        assert_eq!(f.inv(&5).unwrap(), 9);
        assert_eq!(f.inv(&1).unwrap(), 1);
        assert_eq!(f.inv(&0), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn gf9_uses_smallest_modulus() {
        let f = GaloisField::new(3, 2).unwrap();
        assert_eq!(f.modulus(), Some(&[1, 0, 1][..]));
        let w = f.generator();
        assert_eq!(f.mul(&w, &w), f.from_i64(-1));
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(GaloisField::new(6, 1), Err(FieldError::NonPrimeCharacteristic(6)));
        assert!(matches!(GaloisField::new(3, 20), Err(FieldError::FieldTooLarge(_))));
        assert!(GaloisField::with_modulus(2, &[0, 1, 1]).is_err());
    }

    #[test]
    fn explicit_modulus_is_a_distinct_field() {
        let a = GaloisField::with_modulus(3, &[2, 1, 1]).unwrap();
        let b = GaloisField::new(3, 2).unwrap();
        assert_ne!(a, b);
        assert_eq!(a.spec(), "gf(3,2;2,1,1)");
        assert_eq!(b.spec(), "gf(3,2)");
    }

    #[test]
    fn parses_and_formats_elements() {
        let f = GaloisField::new(5, 2).unwrap();
        for a in f.elements().unwrap() {
            assert_eq!(f.parse_elem(&f.format_elem(&a)).unwrap(), a);
        }
        let w = f.generator();
        assert_eq!(f.parse_elem("-w").unwrap(), f.neg(&w));
        assert_eq!(f.parse_elem("2w^2").unwrap(), f.mul(&2, &f.mul(&w, &w)));
        let g = GaloisField::prime(7).unwrap();
        assert_eq!(g.parse_elem("1/3").unwrap(), 5);
        assert_eq!(g.parse_elem("-1/3").unwrap(), 2);
        assert!(g.parse_elem("w").is_err());
        assert!(g.parse_elem("").is_err());
    }

    #[test]
    fn roots_by_search() {
        let f = GaloisField::prime(11).unwrap();
        assert_eq!(f.roots_of(&[f.from_i64(-1), 0, 3]), vec![2, 9]);
        assert_eq!(f.roots_of(&[0, 0, 3]), vec![0]);
        let g = GaloisField::prime(2).unwrap();
        assert!(g.roots_of(&[1, 1, 1]).is_empty());
    }
}
