//! Dense polynomials over the prime field GF(p), used only for picking the
//! irreducible modulus of an extension field.

/// Coefficients low-to-high. Degree is `len - 1`; callers keep them trimmed.
pub(crate) type Dense = Vec<u64>;

fn trim(a: &mut Dense) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

/// Remainder of `a` modulo the monic polynomial `m`.
pub(crate) fn rem_monic(a: &[u64], m: &[u64], p: u64) -> Dense {
    let mut r: Dense = a.to_vec();
    trim(&mut r);
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &c) in m.iter().enumerate() {
                let sub = c * lead % p;
                let slot = &mut r[shift + i];
                *slot = (*slot + p - sub) % p;
            }
        }
        r.pop();
        trim(&mut r);
    }
    r
}

/// Monic polynomial of degree `deg` whose lower coefficients are the base-p
/// digits of `index` (digit `i` is the coefficient of `x^i`).
pub(crate) fn monic_from_index(index: u64, deg: u32, p: u64) -> Dense {
    let mut out = Vec::with_capacity(deg as usize + 1);
    let mut t = index;
    for _ in 0..deg {
        out.push(t % p);
        t /= p;
    }
    out.push(1);
    out
}

/// Irreducibility by trial division against every monic polynomial of degree
/// at most `deg/2`.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = (f.len() - 1) as u32;
    if deg <= 1 {
        return deg == 1;
    }
    if f[0] == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        let count = p.pow(d);
        for idx in 0..count {
            let g = monic_from_index(idx, d, p);
            if rem_monic(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}
