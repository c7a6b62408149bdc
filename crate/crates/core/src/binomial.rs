//! Binomial coefficients over arbitrary-precision integers.
//!
//! Values are memoized in a process-wide table guarded by a read-write lock,
//! so concurrent readers never contend once a value has been computed.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

fn table() -> &'static RwLock<HashMap<(u64, u64), BigUint>> {
    static TABLE: OnceLock<RwLock<HashMap<(u64, u64), BigUint>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    if k == 0 {
        return BigUint::one();
    }
    if let Some(v) = table().read().expect("binomial cache poisoned").get(&(n, k)) {
        return v.clone();
    }
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    table()
        .write()
        .expect("binomial cache poisoned")
        .insert((n, k), acc.clone());
    acc
}

/// `C(n, k)` as a `u64`, or `None` if it does not fit.
pub fn binomial_u64(n: u64, k: u64) -> Option<u64> {
    binomial(n, k).to_u64()
}

/// Signed-argument variant: `C(n, k)` with `C(n, k) = 0` whenever `n < k`
/// or either argument is negative.
pub fn binomial_i(n: i64, k: i64) -> u64 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    binomial_u64(n as u64, k as u64).unwrap_or(u64::MAX)
}
