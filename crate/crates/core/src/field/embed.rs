use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::{Field, FieldError, GaloisField};

/// A fixed field homomorphism `src -> dst`, realised as a lookup table.
#[derive(Clone, Debug)]
pub struct Embedding {
    src: GaloisField,
    dst: GaloisField,
    /// `None` when `src` is a prime field (identity on indices).
    table: Option<Arc<Vec<u32>>>,
}

impl Embedding {
    pub fn src(&self) -> &GaloisField {
        &self.src
    }

    pub fn dst(&self) -> &GaloisField {
        &self.dst
    }

    pub fn apply(&self, a: u32) -> u32 {
        match &self.table {
            None => a,
            Some(t) => t[a as usize],
        }
    }

    /// Identity map of a field onto itself.
    pub fn identity(f: &GaloisField) -> Self {
        Embedding { src: f.clone(), dst: f.clone(), table: None }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Embedding) -> Result<Embedding, FieldError> {
        if self.dst != next.src {
            return Err(FieldError::IncompatibleFields(self.dst.spec(), next.src.spec()));
        }
        if self.table.is_none() && next.table.is_none() {
            return Ok(Embedding { src: self.src.clone(), dst: next.dst.clone(), table: None });
        }
        let table = (0..self.src.size()).map(|a| next.apply(self.apply(a))).collect();
        Ok(Embedding { src: self.src.clone(), dst: next.dst.clone(), table: Some(Arc::new(table)) })
    }
}

type Cache = Mutex<HashMap<((u32, Vec<u32>), (u32, Vec<u32>)), Embedding>>;

fn cache() -> &'static Cache {
    static C: OnceLock<Cache> = OnceLock::new();
    C.get_or_init(Default::default)
}

/// The embedding sending the generator of `src` to the smallest root of its
/// modulus in `dst`. Computed once per pair.
pub fn embed(src: &GaloisField, dst: &GaloisField) -> Result<Embedding, FieldError> {
    if src.p() != dst.p() || !dst.degree().is_multiple_of(src.degree()) {
        return Err(FieldError::IncompatibleFields(src.spec(), dst.spec()));
    }
    if src.degree() == 1 || src == dst {
        return Ok(Embedding { src: src.clone(), dst: dst.clone(), table: None });
    }
    let key = (src.key(), dst.key());
    if let Some(e) = cache().lock().unwrap().get(&key) {
        return Ok(e.clone());
    }
    let modulus = src.modulus().expect("extension field");
    let root = (0..dst.size())
        .find(|&r| {
            let v = modulus.iter().rev().fold(0, |acc, c| dst.add(&dst.mul(&acc, &r), c));
            v == 0
        })
        .ok_or_else(|| FieldError::IncompatibleFields(src.spec(), dst.spec()))?;
    let k = src.degree() as usize;
    let mut powers = Vec::with_capacity(k);
    let mut cur = 1u32;
    for _ in 0..k {
        powers.push(cur);
        cur = dst.mul(&cur, &root);
    }
    let table: Vec<u32> = (0..src.size())
        .map(|a| {
            src.digits(a)
                .iter()
                .zip(&powers)
                .fold(0, |acc, (&d, pw)| dst.add(&acc, &dst.mul(&d, pw)))
        })
        .collect();
    let e = Embedding { src: src.clone(), dst: dst.clone(), table: Some(Arc::new(table)) };
    cache().lock().unwrap().insert(key, e.clone());
    Ok(e)
}
