use exactla::{random::random_combination, Matrix, Scalar};
use rand::Rng;

use crate::object::{Mor, Obj, Structure};
use crate::CatError;

/// Basis of Hom(X, Y): columns are row-major vectorizations of morphism matrices.
pub fn hom_space(x: &Obj, y: &Obj) -> Matrix {
    let f = x.field();
    let (dx, dy) = (x.dim, y.dim);
    let (xs, ys) = Obj::structure_pairs(x, y);
    let mut basis = Matrix::identity(f, dx * dy);
    let idx = Matrix::identity(f, dx);
    let idy = Matrix::identity(f, dy);
    for (a, b) in xs.iter().zip(&ys) {
        if basis.cols() == 0 {
            break;
        }
        // vec(B F − F A) = (B ⊗ I − I ⊗ Aᵀ) vec F
        let c = b.kron(&idx).sub(&idy.kron(&a.transpose()));
        let k = c.mul(&basis).kernel();
        basis = basis.mul(&k);
    }
    basis
}

/// Uniformly random element of Hom(X, Y) in the coordinates of [`hom_space`].
pub fn random_mor<R: Rng + ?Sized>(x: &Obj, y: &Obj, rng: &mut R) -> Mor {
    let basis = hom_space(x, y);
    let v = if basis.cols() == 0 {
        Matrix::zeros(x.field(), x.dim * y.dim, 1)
    } else {
        random_combination(&basis, rng)
    };
    Mor::raw(x, y, v.reshape(y.dim, x.dim))
}

/// Smallest structure-stable subspace containing the columns of `v`.
pub fn closure(x: &Obj, v: &Matrix) -> Matrix {
    let maps = x.structure_maps();
    let mut basis = v.image();
    loop {
        let mut blocks = vec![basis.clone()];
        for m in &maps {
            blocks.push(m.mul(&basis));
        }
        let next = Matrix::hstack_all(x.field(), x.dim, &blocks).image();
        if next.cols() == basis.cols() {
            return homogenize(x, &basis);
        }
        basis = next;
    }
}

/// Whether the column span of `basis` is closed under all structure maps.
pub fn is_subobject_basis(x: &Obj, basis: &Matrix) -> bool {
    x.structure_maps()
        .iter()
        .all(|m| basis.spans(&m.mul(basis)))
}

fn projector<T: PartialEq + Copy>(x: &Obj, degrees: &[T], g: T) -> Matrix {
    let f = x.field();
    Matrix::from_fn(f, x.dim, x.dim, |i, j| {
        if i == j && degrees[i] == g {
            Scalar::one(f)
        } else {
            Scalar::zero(f)
        }
    })
}

/// Rewrites a stable subspace basis as homogeneous vectors where the backend is graded.
fn homogenize(x: &Obj, basis: &Matrix) -> Matrix {
    let f = x.field();
    match &x.structure {
        Structure::Graded(deg) => {
            let mut ds = deg.clone();
            ds.sort();
            ds.dedup();
            let blocks: Vec<Matrix> = ds
                .iter()
                .map(|&g| projector(x, deg, g).mul(basis).image())
                .collect();
            Matrix::hstack_all(f, x.dim, &blocks)
        }
        Structure::Dg { degrees, .. } => {
            let mut ds = degrees.clone();
            ds.sort();
            ds.dedup();
            let blocks: Vec<Matrix> = ds
                .iter()
                .map(|&g| projector(x, degrees, g).mul(basis).image())
                .collect();
            Matrix::hstack_all(f, x.dim, &blocks)
        }
        _ => basis.clone(),
    }
}

fn restrict(basis: &Matrix, m: &Matrix) -> Result<Matrix, CatError> {
    Ok(basis.solve(&m.mul(basis))?)
}

fn degree_of<T: Copy>(degrees: &[T], col: &Matrix) -> T {
    let i = (0..col.rows())
        .find(|&i| !col.is_entry_zero(i, 0))
        .expect("nonzero basis vector");
    degrees[i]
}

/// Subobject spanned by a stable subspace: the object and its inclusion.
pub fn subobject(x: &Obj, v: &Matrix) -> Result<(Obj, Mor), CatError> {
    if !is_subobject_basis(x, v) {
        return Err(CatError::InvalidStructure(
            "subspace is not closed under the structure".into(),
        ));
    }
    let basis = homogenize(x, &v.image());
    let k = basis.cols();
    let structure = match &x.structure {
        Structure::Plain => Structure::Plain,
        Structure::Graded(deg) => {
            Structure::Graded((0..k).map(|j| degree_of(deg, &basis.col(j))).collect())
        }
        Structure::Yd { act, coact } => Structure::Yd {
            act: act
                .iter()
                .map(|m| restrict(&basis, m))
                .collect::<Result<_, _>>()?,
            coact: coact
                .iter()
                .map(|m| restrict(&basis, m))
                .collect::<Result<_, _>>()?,
        },
        Structure::Module(act) => Structure::Module(
            act.iter()
                .map(|m| restrict(&basis, m))
                .collect::<Result<_, _>>()?,
        ),
        Structure::Comodule(c) => Structure::Comodule(
            c.iter()
                .map(|m| restrict(&basis, m))
                .collect::<Result<_, _>>()?,
        ),
        Structure::Dg { degrees, d } => Structure::Dg {
            degrees: (0..k).map(|j| degree_of(degrees, &basis.col(j))).collect(),
            d: restrict(&basis, d)?,
        },
    };
    let sub = Obj::new(x.cat.clone(), k, structure)?;
    let incl = Mor::raw(&sub, x, basis);
    Ok((sub, incl))
}

/// Factors f: X → Y through a monomorphism i: S → Y, returning g with i∘g = f.
pub fn factor_through(f: &Mor, i: &Mor) -> Result<Mor, CatError> {
    let g = i.matrix.solve(&f.matrix)?;
    Ok(Mor::raw(&f.src, &i.src, g))
}

/// Corestriction of f: X → Y to a subobject of Y given by its inclusion.
pub fn restrict_mor(f: &Mor, incl: &Mor) -> Result<Mor, CatError> {
    factor_through(f, incl)
}
