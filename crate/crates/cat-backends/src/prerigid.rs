use exactla::Matrix;

use crate::monoidal::{braid, braid_inv, curry_dual, curry_matrix, dual, ev, tensor, uncurry_dual};
use crate::object::{Mor, Obj};

// Works on matrices directly: the intermediate fourfold tensor objects are never built.
fn theta_with(a: &Obj, b: &Obj, mid: Mor) -> Mor {
    let (da, db) = (dual(a), dual(b));
    let f = a.field();
    let swap = Matrix::identity(f, da.dim)
        .kron(&mid.matrix)
        .kron(&Matrix::identity(f, b.dim));
    let g = ev(a).matrix.kron(&ev(b).matrix).mul(&swap);
    let m = curry_matrix(da.dim * db.dim, a.dim * b.dim, 1, &g);
    Mor::new(&tensor(&da, &db), &dual(&tensor(a, b)), m).expect("shape")
}

/// θ_{A,B}: A*⊗B* → (A⊗B)*, built from id ⊗ c⁻¹_{A,B*} ⊗ id followed by ev ⊗ ev.
pub fn theta(a: &Obj, b: &Obj) -> Mor {
    theta_with(a, b, braid_inv(a, &dual(b)))
}

/// θ^inv_{A,B}, the same composite with c_{B*,A} in the middle.
pub fn theta_inv(a: &Obj, b: &Obj) -> Mor {
    theta_with(a, b, braid(&dual(b), a))
}

/// f: P → U*  ↦  f♭: U → P*.
pub fn flat(f: &Mor, u: &Obj) -> Mor {
    let p = &f.src;
    let g = uncurry_dual(f, u).after(&braid_inv(p, u));
    curry_dual(u, p, &g)
}

/// g: U → P*  ↦  g♯: P → U*.
pub fn sharp(g: &Mor, p: &Obj) -> Mor {
    let u = &g.src;
    let h = uncurry_dual(g, p).after(&braid(p, u));
    curry_dual(p, u, &h)
}

/// α_A = (id_{A*})♭: A → A**.
pub fn alpha(a: &Obj) -> Mor {
    flat(&Mor::identity(&dual(a)), a)
}
