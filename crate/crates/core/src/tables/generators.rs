//! Standard small groups and loops.

use super::{CayleyTable, GroupTable, LoopTable};

fn power_label(base: &str, k: usize) -> String {
    match k {
        0 => "e".to_string(),
        1 => base.to_string(),
        _ => format!("{base}^{k}"),
    }
}

/// Cycle notation for a permutation of `0..n`, `e` for the identity.
fn cycle_label(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut x = perm[start];
        while x != start {
            seen[x] = true;
            cycle.push(x);
            x = perm[x];
        }
        let body: Vec<String> = cycle.iter().map(|c| (c + 1).to_string()).collect();
        out.push_str(&format!("({})", body.join(" ")));
    }
    if out.is_empty() {
        "e".to_string()
    } else {
        out
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q: Vec<usize> = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Sign table of imaginary units: `e_i e_j = sign · e_k` from oriented triples.
fn unit_loop(imaginary: usize, triples: &[[usize; 3]], prefix: &str) -> CayleyTable {
    let m = imaginary + 1;
    // (sign, index) with sign false = +
    let mul_units = |i: usize, j: usize| -> (bool, usize) {
        if i == 0 {
            return (false, j);
        }
        if j == 0 {
            return (false, i);
        }
        if i == j {
            return (true, 0);
        }
        for t in triples {
            for r in 0..3 {
                let (a, b, c) = (t[r], t[(r + 1) % 3], t[(r + 2) % 3]);
                if (a, b) == (i, j) {
                    return (false, c);
                }
                if (b, a) == (i, j) {
                    return (true, c);
                }
            }
        }
        unreachable!("every pair of distinct units lies on a triple")
    };
    let n = 2 * m;
    let labels = (0..n)
        .map(|x| {
            let (neg, u) = (x >= m, x % m);
            let unit = if u == 0 { "1".to_string() } else { format!("{prefix}{u}") };
            if neg {
                format!("-{unit}")
            } else {
                unit
            }
        })
        .collect();
    let table = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    let (s, k) = mul_units(x % m, y % m);
                    let neg = s ^ (x >= m) ^ (y >= m);
                    k + if neg { m } else { 0 }
                })
                .collect()
        })
        .collect();
    CayleyTable::new(labels, table)
}

fn product_table(a: &CayleyTable, b: &CayleyTable) -> CayleyTable {
    let (na, nb) = (a.order(), b.order());
    let mut labels = Vec::with_capacity(na * nb);
    for x in &a.labels {
        for y in &b.labels {
            labels.push(if x == "e" && y == "e" { "e".to_string() } else { format!("({x},{y})") });
        }
    }
    let table = (0..na * nb)
        .map(|i| {
            (0..na * nb)
                .map(|j| a.table[i / nb][j / nb] * nb + b.table[i % nb][j % nb])
                .collect()
        })
        .collect();
    CayleyTable::new(labels, table)
}

impl GroupTable {
    /// The cyclic group `C_n` with generator `g`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let labels = (0..n).map(|k| power_label("g", k)).collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        GroupTable::try_from(CayleyTable::new(labels, table)).expect("cyclic group")
    }

    /// The symmetric group `S_n` in lexicographic order, composing right to left.
    pub fn symmetric(n: usize) -> Self {
        let perms = permutations(n);
        let index = |p: &Vec<usize>| perms.binary_search(p).expect("permutation listed");
        let labels = perms.iter().map(|p| cycle_label(p)).collect();
        let table = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| index(&(0..n).map(|i| s[t[i]]).collect()))
                    .collect()
            })
            .collect();
        GroupTable::try_from(CayleyTable::new(labels, table)).expect("symmetric group")
    }

    /// The dihedral group of order `2n`: index `i + n·j` is `r^i s^j`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 1);
        let labels = (0..2 * n)
            .map(|x| {
                let (i, j) = (x % n, x / n);
                match (i, j) {
                    (0, 0) => "e".to_string(),
                    (_, 0) => power_label("r", i),
                    (0, _) => "s".to_string(),
                    _ => format!("{}s", power_label("r", i)),
                }
            })
            .collect();
        let table = (0..2 * n)
            .map(|x| {
                (0..2 * n)
                    .map(|y| {
                        let (a, b, c, d) = (x % n, x / n, y % n, y / n);
                        let rot = if b == 0 { (a + c) % n } else { (a + n - c) % n };
                        rot + n * ((b + d) % 2)
                    })
                    .collect()
            })
            .collect();
        GroupTable::try_from(CayleyTable::new(labels, table)).expect("dihedral group")
    }

    /// The quaternion group `Q_8`.
    pub fn quaternion() -> Self {
        GroupTable::try_from(unit_loop(3, &[[1, 2, 3]], "q")).expect("quaternion group")
    }

    pub fn direct_product(a: &GroupTable, b: &GroupTable) -> Self {
        GroupTable::try_from(product_table(a.cayley(), b.cayley())).expect("product of groups")
    }
}

/// Oriented lines of the Fano plane: `e_i e_{i+1} = e_{i+3}` (indices mod 7, from 1).
const FANO: [[usize; 3]; 7] = [[1, 2, 4], [2, 3, 5], [3, 4, 6], [4, 5, 7], [5, 6, 1], [6, 7, 2], [7, 1, 3]];

impl LoopTable {
    /// The Moufang loop `O_16` of unit octonions `±1, ±e1, …, ±e7`.
    pub fn octonion_units() -> Self {
        LoopTable::try_from(unit_loop(7, &FANO, "e")).expect("octonion unit loop")
    }

    pub fn from_group(g: &GroupTable) -> Self {
        LoopTable::from(g)
    }

    /// Direct product of an IP loop with a group.
    pub fn direct_product(l: &LoopTable, g: &GroupTable) -> Self {
        LoopTable::try_from(product_table(l.cayley(), g.cayley())).expect("product of IP loops")
    }
}
