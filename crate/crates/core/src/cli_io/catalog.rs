//! Named groups: cyclic, dihedral, symmetric, alternating, quaternion and
//! direct products of these.
//!
//! Spec strings are case-insensitive. Products are written with `x`, e.g.
//! `Z2xZ4`. `Dn` is the dihedral group of order `2n`.

use crate::elemset::Elem;
use crate::group_kernel::GroupTable;

use super::CliError;

/// The sweep catalog, in sweep order.
pub const DEFAULT_CATALOG: [&str; 19] = [
    "Z2", "Z3", "Z4", "Z2xZ2", "Z5", "Z6", "S3", "Z7", "Z8", "Z2xZ4", "Z2xZ2xZ2", "D4", "Q8",
    "Z9", "Z3xZ3", "D5", "Z12", "A4", "D6",
];

pub fn default_catalog() -> Vec<(String, GroupTable)> {
    DEFAULT_CATALOG
        .iter()
        .map(|s| (s.to_string(), parse_catalog(s).expect("catalog entry parses")))
        .collect()
}

fn build(rows: Vec<Vec<usize>>, names: Vec<String>) -> GroupTable {
    GroupTable::from_rows(&rows)
        .and_then(|g| g.with_names(names))
        .expect("catalog construction yields a group")
}

pub fn cyclic(n: usize) -> GroupTable {
    let rows = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    build(rows, (0..n).map(|i| i.to_string()).collect())
}

/// Dihedral group of order `2n`: `r^i` at index `i`, `s r^i` at index `n + i`.
pub fn dihedral(n: usize) -> GroupTable {
    let m = 2 * n;
    let decode = |a: usize| (a >= n, a % n);
    let encode = |refl: bool, i: usize| if refl { n + i } else { i };
    let mut rows = vec![vec![0; m]; m];
    for (a, row) in rows.iter_mut().enumerate() {
        for (b, cell) in row.iter_mut().enumerate() {
            let (sa, i) = decode(a);
            let (sb, j) = decode(b);
            // r^i s = s r^{-i}
            let shift = if sb { (n - i) % n } else { i };
            *cell = encode(sa ^ sb, (shift + j) % n);
        }
    }
    let power = |i: usize| match i {
        0 => String::new(),
        1 => "r".to_string(),
        _ => format!("r{i}"),
    };
    let names = (0..m)
        .map(|a| {
            let (s, i) = decode(a);
            match (s, i) {
                (false, 0) => "e".to_string(),
                (false, _) => power(i),
                (true, _) => format!("s{}", power(i)),
            }
        })
        .collect();
    build(rows, names)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 0..n {
            if !prefix.contains(&v) {
                prefix.push(v);
                rec(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), n, &mut out);
    out
}

fn is_even(p: &[usize]) -> bool {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    inversions % 2 == 0
}

fn cycle_name(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = vec![start + 1];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cycle.push(x + 1);
            x = p[x];
        }
        let body: Vec<String> = cycle.iter().map(ToString::to_string).collect();
        out.push_str(&format!("({})", body.concat()));
    }
    if out.is_empty() {
        "e".to_string()
    } else {
        out
    }
}

/// Permutations in lexicographic order (identity first), composed right to
/// left: `(p∘q)(x) = p(q(x))`.
fn permutation_group(perms: Vec<Vec<usize>>) -> GroupTable {
    let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("closed");
    let rows = perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| index(&q.iter().map(|&x| p[x]).collect::<Vec<_>>()))
                .collect()
        })
        .collect();
    let names = perms.iter().map(|p| cycle_name(p)).collect();
    build(rows, names)
}

pub fn symmetric(n: usize) -> GroupTable {
    permutation_group(permutations(n))
}

pub fn alternating(n: usize) -> GroupTable {
    permutation_group(permutations(n).into_iter().filter(|p| is_even(p)).collect())
}

/// Quaternion group `{1,-1,i,-i,j,-j,k,-k}` in that index order.
pub fn quaternion() -> GroupTable {
    // unit index 0..4 = 1,i,j,k ; element = 2*unit + sign
    let unit_mul = |u: usize, v: usize| -> (bool, usize) {
        match (u, v) {
            (0, v) => (false, v),
            (u, 0) => (false, u),
            (u, v) if u == v => (true, 0),
            (1, 2) => (false, 3),
            (2, 3) => (false, 1),
            (3, 1) => (false, 2),
            (2, 1) => (true, 3),
            (3, 2) => (true, 1),
            (1, 3) => (true, 2),
            _ => unreachable!(),
        }
    };
    let rows = (0..8)
        .map(|a: usize| {
            (0..8)
                .map(|b: usize| {
                    let (neg, u) = unit_mul(a / 2, b / 2);
                    let sign = (a % 2) ^ (b % 2) ^ usize::from(neg);
                    2 * u + sign
                })
                .collect()
        })
        .collect();
    let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(ToString::to_string)
        .collect();
    build(rows, names)
}

pub fn klein() -> GroupTable {
    direct_product(&cyclic(2), &cyclic(2))
}

/// Direct product; `(a, b)` sits at index `a·|B| + b`.
pub fn direct_product(a: &GroupTable, b: &GroupTable) -> GroupTable {
    direct_product_many(&[a.clone(), b.clone()])
}

/// Direct product of several factors, first factor most significant.
pub fn direct_product_many(factors: &[GroupTable]) -> GroupTable {
    let sizes: Vec<usize> = factors.iter().map(GroupTable::order).collect();
    let total: usize = sizes.iter().product();
    let decode = |mut k: usize| -> Vec<Elem> {
        let mut out = vec![0; sizes.len()];
        for i in (0..sizes.len()).rev() {
            out[i] = k % sizes[i];
            k /= sizes[i];
        }
        out
    };
    let encode = |v: &[Elem]| v.iter().zip(&sizes).fold(0, |acc, (&x, &s)| acc * s + x);
    let rows = (0..total)
        .map(|p| {
            let a = decode(p);
            (0..total)
                .map(|q| {
                    let b = decode(q);
                    let c: Vec<Elem> = factors
                        .iter()
                        .zip(a.iter().zip(&b))
                        .map(|(g, (&x, &y))| g.mul(x, y))
                        .collect();
                    encode(&c)
                })
                .collect()
        })
        .collect();
    let names = (0..total)
        .map(|p| {
            let parts: Vec<String> = decode(p)
                .iter()
                .zip(factors)
                .map(|(&x, g)| g.name(x))
                .collect();
            parts.join(".")
        })
        .collect();
    build(rows, names)
}

fn parse_factor(token: &str) -> Option<GroupTable> {
    let t = token.to_ascii_uppercase();
    match t.as_str() {
        "Q8" => return Some(quaternion()),
        "V4" | "K4" => return Some(klein()),
        _ => {}
    }
    if t.is_empty() {
        return None;
    }
    let (head, num) = t.split_at(1);
    let n: usize = num.parse().ok()?;
    match head {
        "Z" | "C" if (1..=64).contains(&n) => Some(cyclic(n)),
        "D" if (2..=32).contains(&n) => Some(dihedral(n)),
        "S" if (1..=4).contains(&n) => Some(symmetric(n)),
        "A" if (1..=4).contains(&n) => Some(alternating(n)),
        _ => None,
    }
}

/// Parses a catalog name such as `Z6`, `s3`, `Z2xZ4`.
pub fn parse_catalog(spec: &str) -> Result<GroupTable, CliError> {
    let factors: Option<Vec<GroupTable>> = spec
        .split(['x', 'X'])
        .map(|tok| parse_factor(tok.trim()))
        .collect();
    let factors = factors
        .filter(|f| !f.is_empty())
        .ok_or_else(|| CliError::UnknownGroup(spec.to_string()))?;
    let order: usize = factors.iter().map(GroupTable::order).product();
    if order > crate::elemset::MAX_ORDER {
        return Err(CliError::UnknownGroup(format!(
            "{spec} (order {order} is too large)"
        )));
    }
    Ok(if factors.len() == 1 {
        factors.into_iter().next().unwrap()
    } else {
        direct_product_many(&factors)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_kernel::find_isomorphism;

    #[test]
    fn orders() {
        let expected = [2, 3, 4, 4, 5, 6, 6, 7, 8, 8, 8, 8, 8, 9, 9, 10, 12, 12, 12];
        let got: Vec<usize> = default_catalog().iter().map(|(_, g)| g.order()).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn names_and_identities() {
        let s3 = symmetric(3);
        assert_eq!(s3.name(0), "e");
        assert_eq!(s3.identity(), 0);
        assert!(s3.lookup_name("(12)").is_some());
        assert!(s3.lookup_name("(123)").is_some());
        let q = quaternion();
        let i = q.lookup_name("i").unwrap();
        let j = q.lookup_name("j").unwrap();
        assert_eq!(q.name(q.mul(i, j)), "k");
        assert_eq!(q.name(q.mul(j, i)), "-k");
        assert_eq!(q.name(q.mul(i, i)), "-1");
        assert!(!q.is_abelian());
        assert!(!dihedral(4).is_abelian());
        assert_eq!(alternating(4).order(), 12);
    }

    #[test]
    fn parse_is_case_insensitive() {
        assert_eq!(parse_catalog("z2xz4").unwrap(), parse_catalog("Z2xZ4").unwrap());
        assert_eq!(parse_catalog("Z2xZ4").unwrap().order(), 8);
        assert!(parse_catalog("Y7").is_err());
        assert!(parse_catalog("").is_err());
        assert!(parse_catalog("Z64xZ2").is_err());
    }

    #[test]
    fn small_coincidences() {
        assert!(find_isomorphism(&dihedral(3), &symmetric(3), 32).unwrap().is_some());
        assert!(find_isomorphism(&dihedral(2), &klein(), 32).unwrap().is_some());
        assert!(find_isomorphism(&dihedral(4), &quaternion(), 32).unwrap().is_none());
        assert!(find_isomorphism(&cyclic(12), &alternating(4), 32).unwrap().is_none());
        assert!(find_isomorphism(&dihedral(6), &alternating(4), 32).unwrap().is_none());
    }
}
