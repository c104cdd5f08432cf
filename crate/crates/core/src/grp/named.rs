//! Small groups used by the tests, the corpus and the CLI.

use super::{FiniteGroup, Group, Perm, Subgroup};

fn build(degree: usize, gens: Vec<Perm>, name: &str) -> Group {
    FiniteGroup::from_generators(degree, gens, Some(name.to_string()))
        .expect("named groups are valid and within the default bound")
}

fn cycle(degree: usize, pts: &[usize]) -> Perm {
    Perm::from_cycles(degree, &[pts]).expect("valid cycle")
}

/// `C_n` acting regularly on `n` points.
pub fn cyclic(n: usize) -> Group {
    let pts: Vec<usize> = (0..n).collect();
    let g = if n == 1 { Perm::identity(1) } else { cycle(n, &pts) };
    build(n, vec![g], &format!("C{n}"))
}

/// `S_n` generated by the adjacent transpositions.
pub fn symmetric(n: usize) -> Group {
    let gens = if n < 2 {
        vec![Perm::identity(n.max(1))]
    } else {
        (0..n - 1).map(|i| cycle(n, &[i, i + 1])).collect()
    };
    build(n.max(1), gens, &format!("S{n}"))
}

/// `S3` with generators `(0 1 2)` and `(0 1)`.
pub fn s3() -> Group {
    build(3, vec![cycle(3, &[0, 1, 2]), cycle(3, &[0, 1])], "S3")
}

/// `A_n` generated by the 3-cycles `(0 1 i)`.
pub fn alternating(n: usize) -> Group {
    let gens = if n < 3 {
        vec![Perm::identity(n.max(1))]
    } else {
        (2..n).map(|i| cycle(n, &[0, 1, i])).collect()
    };
    build(n.max(1), gens, &format!("A{n}"))
}

/// The even permutations of a symmetric group, as a subgroup.
pub fn alternating_in(g: &Group) -> Subgroup {
    let d = g.degree();
    let gens: Vec<usize> = (2..d)
        .filter_map(|i| g.index_of(&cycle(d, &[0, 1, i])))
        .collect();
    Subgroup::generated(g, &gens)
}

/// Dihedral group of order `2n` on the vertices of an `n`-gon.
pub fn dihedral(n: usize) -> Group {
    let rot: Vec<usize> = (0..n).collect();
    let refl = Perm::new((0..n).map(|i| (n - i) % n).collect()).expect("reflection");
    build(n, vec![cycle(n, &rot), refl], &format!("D{n}"))
}

/// Quaternion group `Q8` acting on itself by left multiplication.
/// Point `2u + s` is the unit `(−1)^s · [1, i, j, k][u]`.
pub fn quaternion() -> Group {
    // unit products: table[a][b] = (sign, unit) of basis_a · basis_b
    const T: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let left = |u: usize| {
        let images: Vec<usize> = (0..8)
            .map(|pt| {
                let (b, s) = (pt / 2, pt % 2);
                let (s2, v) = T[u][b];
                2 * v + (s + s2) % 2
            })
            .collect();
        Perm::new(images).expect("left multiplication is a bijection")
    };
    build(8, vec![left(1), left(2)], "Q8")
}

/// `C2 × C2 × C2` on six points.
pub fn elementary_abelian_8() -> Group {
    build(6, vec![cycle(6, &[0, 1]), cycle(6, &[2, 3]), cycle(6, &[4, 5])], "C2xC2xC2")
}

/// Klein four-group on four points.
pub fn klein4() -> Group {
    build(4, vec![Perm::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap(),
                  Perm::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap()], "V4")
}

/// `C_m × C_n` on `m + n` points.
pub fn cyclic_product(m: usize, n: usize) -> Group {
    let a: Vec<usize> = (0..m).collect();
    let b: Vec<usize> = (m..m + n).collect();
    build(m + n, vec![cycle(m + n, &a), cycle(m + n, &b)], &format!("C{m}xC{n}"))
}

/// Look up a group by name (`C5`, `S3`, `D4`, `Q8`, `A4`, ...).
pub fn by_name(name: &str) -> Option<Group> {
    let num = |prefix: &str| name.strip_prefix(prefix).and_then(|s| s.parse::<usize>().ok());
    match name {
        "Q8" => return Some(quaternion()),
        "V4" => return Some(klein4()),
        "C2xC2xC2" => return Some(elementary_abelian_8()),
        "S3" => return Some(s3()),
        _ => {}
    }
    if let Some(n) = num("C").filter(|&n| (1..=60).contains(&n)) {
        return Some(cyclic(n));
    }
    if let Some(n) = num("S").filter(|&n| (1..=6).contains(&n)) {
        return Some(symmetric(n));
    }
    if let Some(n) = num("A").filter(|&n| (3..=6).contains(&n)) {
        return Some(alternating(n));
    }
    if let Some(n) = num("D").filter(|&n| (3..=30).contains(&n)) {
        return Some(dihedral(n));
    }
    None
}
