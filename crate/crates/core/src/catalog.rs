//! Constructors for the named groups used throughout the crate.
//!
//! Classical groups are realized as permutation groups on the points of the
//! projective space of their natural module. Unitary groups use the Hermitian
//! form with identity Gram matrix over `F_{q²}`, i.e. `⟨u, v⟩ = Σ uᵢ vᵢ^q`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{is_prime, prime_power, FieldElement, FiniteField};
use crate::group::{ElementId, FiniteGroup, DEFAULT_CLOSURE_LIMIT};
use crate::linear::{nullspace, Matrix, ProjectiveSpace};
use crate::perm::Permutation;

pub fn sym(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::BadParameter("sym(n) needs n >= 1".into()));
    }
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Permutation::from_cycles(n, &[vec![0, 1]])?);
    }
    if n >= 3 {
        gens.push(Permutation::from_cycles(n, &[(0..n as u32).collect()])?);
    }
    FiniteGroup::close(n, gens, DEFAULT_CLOSURE_LIMIT)
}

pub fn alt(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::BadParameter("alt(n) needs n >= 1".into()));
    }
    // the 3-cycles (1 2 k) generate Alt_n
    let gens = (2..n as u32)
        .map(|k| Permutation::from_cycles(n, &[vec![0, 1, k]]))
        .collect::<Result<Vec<_>>>()?;
    FiniteGroup::close(n, gens, DEFAULT_CLOSURE_LIMIT)
}

pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::BadParameter("cyclic(n) needs n >= 1".into()));
    }
    let gen = Permutation::from_cycles(n, &[(0..n as u32).collect()])?;
    FiniteGroup::close(n, vec![gen], DEFAULT_CLOSURE_LIMIT)
}

/// Symmetries of the regular `n`-gon, order `2n`.
pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    if n < 3 {
        return Err(Error::BadParameter("dihedral(n) needs n >= 3".into()));
    }
    let rot = Permutation::from_cycles(n, &[(0..n as u32).collect()])?;
    let refl = Permutation::from_images((0..n as u32).map(|i| (n as u32 - i) % n as u32).collect())?;
    FiniteGroup::close(n, vec![rot, refl], DEFAULT_CLOSURE_LIMIT)
}

/// Heisenberg group of upper unitriangular 3×3 matrices over `F_p`, acting on
/// the column vectors of `F_p³` (point `v₀ + p v₁ + p² v₂`). For odd `p` this is
/// the extraspecial group of order `p³` and exponent `p`.
pub fn extraspecial_p3_exponent_p(p: u32) -> Result<FiniteGroup> {
    if !(3..=7).contains(&p) || !is_prime(p as u64) {
        return Err(Error::BadParameter(format!(
            "extraspecial group needs an odd prime p <= 7, got {p}"
        )));
    }
    let n = (p * p * p) as usize;
    let idx = |v: [u32; 3]| v[0] + p * v[1] + p * p * v[2];
    let act = |row: usize, col: usize| -> Permutation {
        let images = (0..n as u32)
            .map(|code| {
                let mut v = [code % p, (code / p) % p, code / (p * p)];
                v[row] = (v[row] + v[col]) % p;
                idx(v)
            })
            .collect();
        Permutation::from_images_unchecked(images)
    };
    FiniteGroup::close(n, vec![act(0, 1), act(1, 2)], DEFAULT_CLOSURE_LIMIT)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ClassicalKind {
    GL,
    SL,
    GU,
    SU,
}

impl ClassicalKind {
    fn is_unitary(self) -> bool {
        matches!(self, ClassicalKind::GU | ClassicalKind::SU)
    }
}

fn gcd(a: u128, b: u128) -> u128 {
    num_integer::gcd(a, b)
}

/// Order of `PGL/PSL/PGU/PSU_d(q)` (the projective image of the matrix group).
pub fn projective_order(kind: ClassicalKind, d: u32, q: u64) -> u128 {
    let q = q as u128;
    let pow = |e: u32| q.pow(e);
    let unipotent = pow(d * (d - 1) / 2);
    match kind {
        ClassicalKind::GL | ClassicalKind::SL => {
            let gl = unipotent * (1..=d).map(|i| pow(i) - 1).product::<u128>();
            if kind == ClassicalKind::GL {
                gl / (q - 1)
            } else {
                gl / (q - 1) / gcd(d as u128, q - 1)
            }
        }
        ClassicalKind::GU | ClassicalKind::SU => {
            let gu = unipotent
                * (1..=d)
                    .map(|i| if i % 2 == 0 { pow(i) - 1 } else { pow(i) + 1 })
                    .product::<u128>();
            if kind == ClassicalKind::GU {
                gu / (q + 1)
            } else {
                gu / (q + 1) / gcd(d as u128, q + 1)
            }
        }
    }
}

/// The field the matrices live over: `F_q`, or `F_{q²}` for unitary groups.
pub fn natural_field(kind: ClassicalKind, q: u64) -> Result<FiniteField> {
    let (p, f) = prime_power(q).ok_or_else(|| Error::BadParameter(format!("{q} is not a prime power")))?;
    let f = if kind.is_unitary() { 2 * f } else { f };
    FiniteField::new(p as u64, f)
}

/// Transvection generators `I + λE_ij` (λ running over an `F_p`-basis of `F_q`),
/// plus `diag(ω, 1, …, 1)` for GL.
fn linear_generators(kind: ClassicalKind, d: usize, k: &FiniteField) -> Vec<Matrix> {
    let w = k.primitive();
    let basis: Vec<FieldElement> = (0..k.degree() as u64).map(|e| k.pow(w, e)).collect();
    let mut gens = Vec::new();
    for i in 0..d {
        for j in 0..d {
            if i != j {
                for &lam in &basis {
                    gens.push(Matrix::elementary(d, i, j, lam));
                }
            }
        }
    }
    if kind == ClassicalKind::GL && k.order() > 2 {
        let mut diag = vec![k.one(); d];
        diag[0] = w;
        gens.push(Matrix::diagonal(&diag));
    }
    gens
}

/// `x ↦ x^q` on `F_{q²}`.
fn hermitian_conj(k: &FiniteField, x: FieldElement) -> FieldElement {
    let q = (k.order() as f64).sqrt().round() as u64;
    k.pow(x, q)
}

fn hermitian(k: &FiniteField, u: &[FieldElement], v: &[FieldElement]) -> FieldElement {
    u.iter()
        .zip(v)
        .fold(k.zero(), |acc, (&a, &b)| k.add(acc, k.mul(a, hermitian_conj(k, b))))
}

/// True if `M` preserves the identity-Gram Hermitian form, i.e. its columns are orthonormal.
pub fn preserves_hermitian_form(m: &Matrix, k: &FiniteField) -> bool {
    let d = m.dim();
    (0..d).all(|i| {
        (0..d).all(|j| {
            let h = hermitian(k, &m.column(i), &m.column(j));
            h == if i == j { k.one() } else { k.zero() }
        })
    })
}

/// A random unitary matrix built column by column from an orthonormal basis.
fn random_unitary(d: usize, k: &FiniteField, special: bool, rng: &mut ChaCha8Rng) -> Matrix {
    let mut cols: Vec<Vec<FieldElement>> = Vec::new();
    while cols.len() < d {
        let rows: Vec<Vec<FieldElement>> = cols
            .iter()
            .map(|c| c.iter().map(|&x| hermitian_conj(k, x)).collect())
            .collect();
        let basis = nullspace(&rows, d, k);
        let coeffs: Vec<FieldElement> = basis
            .iter()
            .map(|_| FieldElement(rng.gen_range(0..k.order())))
            .collect();
        let v: Vec<FieldElement> = (0..d)
            .map(|t| {
                basis
                    .iter()
                    .zip(&coeffs)
                    .fold(k.zero(), |acc, (b, &c)| k.add(acc, k.mul(c, b[t])))
            })
            .collect();
        let norm = hermitian(k, &v, &v);
        let Some(target) = k.inv(norm) else { continue };
        // norm map is onto F_q*, so some λ has λ^{q+1} = 1/⟨v,v⟩
        let roots: Vec<FieldElement> = k
            .elements()
            .filter(|&l| k.mul(l, hermitian_conj(k, l)) == target)
            .collect();
        let lam = roots[rng.gen_range(0..roots.len())];
        cols.push(v.iter().map(|&x| k.mul(x, lam)).collect());
    }
    let mut m = Matrix::identity(d);
    for (j, c) in cols.iter().enumerate() {
        for (i, &x) in c.iter().enumerate() {
            m.set(i, j, x);
        }
    }
    if special {
        let det = m.det(k);
        m.scale_column(0, k.inv(det).expect("unitary matrices are invertible"), k);
    }
    m
}

/// Matrix generators for the requested classical group, with the field they live over.
pub fn classical_generators(kind: ClassicalKind, d: usize, q: u64, count: usize) -> Result<(FiniteField, Vec<Matrix>)> {
    let k = natural_field(kind, q)?;
    if !kind.is_unitary() {
        return Ok((k.clone(), linear_generators(kind, d, &k)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0000 + (d as u64) * 1000 + q);
    let special = kind == ClassicalKind::SU;
    let gens = (0..count).map(|_| random_unitary(d, &k, special, &mut rng)).collect();
    Ok((k, gens))
}

/// The projective image of `GL/SL/GU/SU_d(q)` acting on the points of its
/// natural projective space.
pub fn projective_group(kind: ClassicalKind, d: usize, q: u64) -> Result<FiniteGroup> {
    projective_group_with_limit(kind, d, q, DEFAULT_CLOSURE_LIMIT)
}

pub fn projective_group_with_limit(kind: ClassicalKind, d: usize, q: u64, limit: usize) -> Result<FiniteGroup> {
    if d < 2 {
        return Err(Error::BadParameter("dimension must be at least 2".into()));
    }
    prime_power(q).ok_or_else(|| Error::BadParameter(format!("{q} is not a prime power")))?;
    let expected = projective_order(kind, d as u32, q);
    if expected > limit as u128 {
        return Err(Error::TooLarge(format!(
            "{kind:?}({d},{q}) has projective order {expected} > limit {limit}"
        )));
    }
    if !kind.is_unitary() {
        let (k, mats) = classical_generators(kind, d, q, 0)?;
        let space = ProjectiveSpace::new(d, &k);
        let gens = mats.iter().map(|m| space.action(m, &k)).collect();
        let g = FiniteGroup::close(space.len(), gens, limit)?;
        debug_assert_eq!(g.order() as u128, expected);
        return Ok(g);
    }
    // Random unitary generators; add more until the full group is reached.
    for count in 2..=8 {
        let (k, mats) = classical_generators(kind, d, q, count)?;
        let space = ProjectiveSpace::new(d, &k);
        let gens = mats.iter().map(|m| space.action(m, &k)).collect();
        let g = FiniteGroup::close(space.len(), gens, limit)?;
        if g.order() as u128 == expected {
            return Ok(g);
        }
    }
    Err(Error::BadParameter(format!(
        "could not generate {kind:?}({d},{q}) from random unitary matrices"
    )))
}

/// `Aut(PSL_3(4))` on the 21 points and 21 lines of `PG(2,4)`, with the
/// subgroups `PSL_3(4)` and `PGL_3(4)` as element-id sets.
pub struct AutPsl34 {
    pub group: FiniteGroup,
    pub psl: Vec<ElementId>,
    pub pgl: Vec<ElementId>,
}

/// Points are `0..21`, lines `21..42`; a line with coordinate row `ℓ` is the
/// set of points `v` with `ℓ·v = 0`. Generated by `PGL_3(4)` (points `v ↦ Mv`,
/// lines `ℓ ↦ M^{-T}ℓ`), the Frobenius `x ↦ x²`, and the duality swapping the
/// point and line with the same coordinates.
pub fn extended_aut_psl34() -> Result<AutPsl34> {
    let k = FiniteField::new(2, 2)?;
    let space = ProjectiveSpace::new(3, &k);
    let n = space.len();
    let semilinear = |point_map: &dyn Fn(&[FieldElement]) -> Vec<FieldElement>,
                      line_map: &dyn Fn(&[FieldElement]) -> Vec<FieldElement>|
     -> Permutation {
        let pts = space.map_points(&k, point_map);
        let lines = space.map_points(&k, line_map);
        let images = pts
            .images()
            .iter()
            .copied()
            .chain(lines.images().iter().map(|&x| x + n as u32))
            .collect();
        Permutation::from_images_unchecked(images)
    };
    let sl = linear_generators(ClassicalKind::SL, 3, &k);
    let gl_extra: Vec<Matrix> = linear_generators(ClassicalKind::GL, 3, &k)
        .into_iter()
        .filter(|m| !sl.contains(m))
        .collect();
    let lift = |m: &Matrix| {
        let dual = m.inverse(&k).expect("invertible").transpose();
        semilinear(&|v| m.apply(v, &k), &|l| dual.apply(l, &k))
    };
    let sl_perms: Vec<Permutation> = sl.iter().map(lift).collect();
    let gl_perms: Vec<Permutation> = gl_extra.iter().map(lift).collect();
    let frob = semilinear(
        &|v| v.iter().map(|&x| k.frobenius(x)).collect(),
        &|l| l.iter().map(|&x| k.frobenius(x)).collect(),
    );
    let duality = Permutation::from_images_unchecked(
        (0..2 * n as u32).map(|i| (i + n as u32) % (2 * n as u32)).collect(),
    );
    let mut gens = sl_perms.clone();
    gens.extend(gl_perms.iter().cloned());
    gens.push(frob);
    gens.push(duality);
    let group = FiniteGroup::close(2 * n, gens, DEFAULT_CLOSURE_LIMIT)?;
    let ids = |ps: &[Permutation]| -> Vec<ElementId> {
        ps.iter().map(|p| group.index_of(p.images()).unwrap()).collect()
    };
    let sl_ids = ids(&sl_perms);
    let mut gl_ids = sl_ids.clone();
    gl_ids.extend(ids(&gl_perms));
    let psl = group.subgroup_closure(&sl_ids);
    let pgl = group.subgroup_closure(&gl_ids);
    Ok(AutPsl34 { group, psl, pgl })
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub id: String,
    pub description: String,
    pub order: u128,
}

fn factorial(n: u128) -> u128 {
    (1..=n).product()
}

/// The groups shown by `catalog list`; every id is accepted by [`by_name`].
pub fn list() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    let mut push = |id: String, description: String, order: u128| {
        out.push(CatalogEntry { id, description, order })
    };
    for n in 2..=7 {
        push(format!("sym{n}"), format!("symmetric group of degree {n}"), factorial(n));
    }
    for n in 3..=7 {
        push(format!("alt{n}"), format!("alternating group of degree {n}"), factorial(n) / 2);
    }
    for n in [2, 3, 4, 5, 6, 12] {
        push(format!("cyclic{n}"), format!("cyclic group of order {n}"), n);
    }
    for n in [4, 5, 6] {
        push(format!("dihedral{n}"), format!("dihedral group of order {}", 2 * n), 2 * n);
    }
    for p in [3u128, 5, 7] {
        push(
            format!("extraspecial({p})"),
            format!("extraspecial group of order {} and exponent {p}", p.pow(3)),
            p.pow(3),
        );
    }
    let classical: [(&str, ClassicalKind, u32, u64); 15] = [
        ("psl", ClassicalKind::SL, 2, 5),
        ("psl", ClassicalKind::SL, 2, 7),
        ("psl", ClassicalKind::SL, 2, 8),
        ("psl", ClassicalKind::SL, 2, 9),
        ("psl", ClassicalKind::SL, 2, 11),
        ("psl", ClassicalKind::SL, 3, 2),
        ("psl", ClassicalKind::SL, 3, 4),
        ("pgl", ClassicalKind::GL, 2, 3),
        ("pgl", ClassicalKind::GL, 2, 7),
        ("pgl", ClassicalKind::GL, 3, 2),
        ("pgl", ClassicalKind::GL, 3, 4),
        ("pgl", ClassicalKind::GL, 4, 2),
        ("pgu", ClassicalKind::GU, 3, 2),
        ("pgu", ClassicalKind::GU, 3, 4),
        ("pgu", ClassicalKind::GU, 4, 2),
    ];
    for (name, kind, d, q) in classical {
        push(
            format!("{name}({d},{q})"),
            format!("{} on the points of PG({}, {q})", name.to_uppercase(), d - 1),
            projective_order(kind, d, q),
        );
    }
    push(
        "aut(psl(3,4))".into(),
        "Aut(PSL_3(4)) on the points and lines of PG(2,4)".into(),
        241_920,
    );
    out
}

/// Split `"name(a,b)"` or `"nameN"` into the lowercase name and its integer arguments.
pub(crate) fn parse_call(id: &str) -> Option<(String, Vec<u64>)> {
    let id: String = id.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_lowercase();
    if let Some(open) = id.find('(') {
        let inner = id[open + 1..].strip_suffix(')')?;
        let args = inner
            .split(',')
            .map(|a| a.parse().ok())
            .collect::<Option<Vec<u64>>>()?;
        return Some((id[..open].to_string(), args));
    }
    let split = id.find(|c: char| c.is_ascii_digit())?;
    let arg = id[split..].parse().ok()?;
    Some((id[..split].to_string(), vec![arg]))
}

/// Construct a catalog group from its id (`alt5`, `sym(6)`, `psl(3,4)`, …).
pub fn by_name(id: &str) -> Result<FiniteGroup> {
    let normalized: String = id.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_lowercase();
    if normalized == "aut(psl(3,4))" || normalized == "autpsl34" {
        return Ok(extended_aut_psl34()?.group);
    }
    let (name, args) = parse_call(&normalized).ok_or_else(|| Error::UnknownGroup(id.to_string()))?;
    let one = |args: &[u64]| -> Result<usize> {
        match args {
            [n] => Ok(*n as usize),
            _ => Err(Error::BadParameter(format!("{id}: expected one argument"))),
        }
    };
    let two = |args: &[u64]| -> Result<(usize, u64)> {
        match args {
            [d, q] => Ok((*d as usize, *q)),
            _ => Err(Error::BadParameter(format!("{id}: expected (d, q)"))),
        }
    };
    match name.as_str() {
        "sym" => sym(one(&args)?),
        "alt" => alt(one(&args)?),
        "cyclic" => cyclic(one(&args)?),
        "dihedral" => dihedral(one(&args)?),
        "extraspecial" => extraspecial_p3_exponent_p(one(&args)? as u32),
        "psl" => {
            let (d, q) = two(&args)?;
            projective_group(ClassicalKind::SL, d, q)
        }
        "pgl" => {
            let (d, q) = two(&args)?;
            projective_group(ClassicalKind::GL, d, q)
        }
        "psu" => {
            let (d, q) = two(&args)?;
            projective_group(ClassicalKind::SU, d, q)
        }
        "pgu" => {
            let (d, q) = two(&args)?;
            projective_group(ClassicalKind::GU, d, q)
        }
        _ => Err(Error::UnknownGroup(id.to_string())),
    }
}
