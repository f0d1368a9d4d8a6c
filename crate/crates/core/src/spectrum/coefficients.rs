use std::collections::HashMap;
use std::f64::consts::TAU;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};

/// Eager precompute bound used by front ends when nothing else is configured.
pub const DEFAULT_EAGER_BOUND: usize = 512;

/// `cos(q * 2π / l)` for `q = 0..=l/2`.
///
/// Every coefficient `cos(q * 2kπ / l)` the closed form needs for any `k`
/// is one of these entries after reflecting `q*k mod l` into `0..=l/2`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientTable {
    l: usize,
    cosines: Box<[f64]>,
}

impl CoefficientTable {
    /// Computes a fresh table, bypassing the cache. Each entry is a direct
    /// `cos` call rather than a recurrence.
    pub fn new(l: usize) -> Result<Self> {
        if l < 2 {
            return Err(Error::TableTooSmall(l));
        }
        let step = TAU / l as f64;
        let cosines = (0..=l / 2).map(|q| (q as f64 * step).cos()).collect();
        Ok(Self { l, cosines })
    }

    pub fn period(&self) -> usize {
        self.l
    }

    pub fn cosines(&self) -> &[f64] {
        &self.cosines
    }

    /// `cos(q * 2kπ / l)` for `1 <= k < l`, `1 <= q <= l/2`.
    pub fn lookup(&self, k: usize, q: usize) -> Result<f64> {
        let l = self.l;
        if k == 0 || k >= l {
            return Err(Error::PhaseOutOfRange { k, l });
        }
        if q == 0 || q > l / 2 {
            return Err(Error::LagOutOfRange { q, l });
        }
        Ok(self.reflected(k, q))
    }

    /// Lookup without range checks; `q * k` must not overflow.
    #[inline]
    pub(crate) fn reflected(&self, k: usize, q: usize) -> f64 {
        let r = (q * k) % self.l;
        if r > self.l / 2 {
            self.cosines[self.l - r]
        } else {
            self.cosines[r]
        }
    }
}

pub fn coefficient_lookup(table: &CoefficientTable, k: usize, q: usize) -> Result<f64> {
    table.lookup(k, q)
}

type Cache = RwLock<HashMap<usize, Arc<CoefficientTable>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Shared table for `l`, computed on first use.
///
/// Threads racing on a missing `l` may each build a table; the first one
/// inserted wins and every caller gets that same `Arc`.
pub fn coefficient_table(l: usize) -> Result<Arc<CoefficientTable>> {
    if l < 2 {
        return Err(Error::TableTooSmall(l));
    }
    if let Some(table) = cache().read().unwrap_or_else(|e| e.into_inner()).get(&l) {
        return Ok(Arc::clone(table));
    }
    let fresh = Arc::new(CoefficientTable::new(l)?);
    let mut map = cache().write().unwrap_or_else(|e| e.into_inner());
    Ok(Arc::clone(map.entry(l).or_insert(fresh)))
}

/// Fills the cache for every `l` in `2..=max_l`.
pub fn precompute_coefficient_tables(max_l: usize) {
    let missing: Vec<usize> = {
        let map = cache().read().unwrap_or_else(|e| e.into_inner());
        (2..=max_l).filter(|l| !map.contains_key(l)).collect()
    };
    if missing.is_empty() {
        return;
    }
    let built: Vec<_> = missing
        .into_iter()
        .filter_map(|l| CoefficientTable::new(l).ok().map(|t| (l, Arc::new(t))))
        .collect();
    let mut map = cache().write().unwrap_or_else(|e| e.into_inner());
    for (l, table) in built {
        map.entry(l).or_insert(table);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn small_tables() {
        let t = CoefficientTable::new(4).unwrap();
        assert_eq!(t.cosines().len(), 3);
        for (got, want) in t.cosines().iter().zip([1.0, 0.0, -1.0]) {
            assert!((got - want).abs() < 1e-15);
        }
        let t = CoefficientTable::new(3).unwrap();
        assert_eq!(t.cosines()[0], 1.0);
        assert!((t.cosines()[1] + 0.5).abs() < 1e-15);
        assert_eq!(CoefficientTable::new(2).unwrap().cosines(), &[1.0, -1.0]);
    }

    #[test]
    fn entries_match_direct_cosine() {
        let t = CoefficientTable::new(37).unwrap();
        assert!((t.cosines()[10] - (20.0 * PI / 37.0).cos()).abs() <= 1e-15);
        for l in 2..300 {
            let t = CoefficientTable::new(l).unwrap();
            assert_eq!(t.cosines()[0], 1.0);
            for (q, c) in t.cosines().iter().enumerate() {
                assert!((-1.0..=1.0).contains(c));
                assert!((c - (2.0 * PI * q as f64 / l as f64).cos()).abs() <= 1e-15);
            }
        }
    }

    #[test]
    fn rejects_degenerate_denominators() {
        assert_eq!(CoefficientTable::new(1), Err(Error::TableTooSmall(1)));
        assert_eq!(coefficient_table(0).unwrap_err(), Error::TableTooSmall(0));
    }

    #[test]
    fn lookup_reflects_remainders() {
        let t = CoefficientTable::new(5).unwrap();
        assert_eq!(t.lookup(2, 1).unwrap(), t.cosines()[2]);
        assert_eq!(t.lookup(3, 1).unwrap(), t.cosines()[2]);
        assert!((t.lookup(3, 1).unwrap() - (6.0 * PI / 5.0).cos()).abs() < 1e-15);
        assert_eq!(t.lookup(0, 1), Err(Error::PhaseOutOfRange { k: 0, l: 5 }));
        assert_eq!(t.lookup(5, 1), Err(Error::PhaseOutOfRange { k: 5, l: 5 }));
        assert_eq!(t.lookup(1, 0), Err(Error::LagOutOfRange { q: 0, l: 5 }));
        assert_eq!(t.lookup(1, 3), Err(Error::LagOutOfRange { q: 3, l: 5 }));
    }

    #[test]
    fn lookup_matches_direct_cosine_everywhere() {
        for l in 2..80usize {
            let t = CoefficientTable::new(l).unwrap();
            for k in 1..l {
                for q in 1..=l / 2 {
                    let direct = (q as f64 * 2.0 * k as f64 * PI / l as f64).cos();
                    assert!((t.lookup(k, q).unwrap() - direct).abs() <= 1e-12);
                }
            }
        }
    }

    #[test]
    fn cache_returns_the_same_table() {
        let a = coefficient_table(97).unwrap();
        let b = coefficient_table(97).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
        assert_eq!(*a, CoefficientTable::new(97).unwrap());
    }

    #[test]
    fn precompute_then_lookup_hits_cache() {
        precompute_coefficient_tables(24);
        let first = coefficient_table(24).unwrap();
        precompute_coefficient_tables(24);
        assert!(Arc::ptr_eq(&first, &coefficient_table(24).unwrap()));
    }

    #[test]
    fn concurrent_initialisation_agrees() {
        let tables: Vec<_> = std::thread::scope(|s| {
            let handles: Vec<_> = (0..8)
                .map(|_| s.spawn(|| coefficient_table(1031).unwrap()))
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        for t in &tables[1..] {
            assert!(Arc::ptr_eq(&tables[0], t));
        }
        assert_eq!(tables[0].cosines().len(), 1031 / 2 + 1);
    }
}
