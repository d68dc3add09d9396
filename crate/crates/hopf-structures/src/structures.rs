use cat_backends::{braid, braided_comul_product, tensor, tensor_mor, unit_obj, Mor, Obj, Report};
use exactla::Matrix;

/// (A, μ, u) in a backend.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidStr {
    pub carrier: Obj,
    pub mul: Mor,
    pub unit: Mor,
}

/// (P, Δ, ε) in a backend.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComonoidStr {
    pub carrier: Obj,
    pub comul: Mor,
    pub counit: Mor,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimonoidStr {
    pub monoid: MonoidStr,
    pub comonoid: ComonoidStr,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfStr {
    pub bimonoid: BimonoidStr,
    pub antipode: Mor,
    pub antipode_inv: Mor,
}

/// Any of the four structure kinds, for [`validate_structure`].
#[derive(Clone, Debug)]
pub enum AnyStructure {
    Monoid(MonoidStr),
    Comonoid(ComonoidStr),
    Bimonoid(BimonoidStr),
    Hopf(HopfStr),
}

fn id(x: &Obj) -> Mor {
    Mor::identity(x)
}

fn shape_ok(r: &mut Report, name: &str, m: &Mor, src: &Obj, dst: &Obj) -> bool {
    if m.src.dim != src.dim || m.dst.dim != dst.dim {
        r.push(
            format!("{name}:shape"),
            vec![m.matrix.rows(), m.matrix.cols()],
        );
        return false;
    }
    true
}

impl MonoidStr {
    pub fn new(
        carrier: &Obj,
        mul: Matrix,
        unit: Matrix,
    ) -> Result<MonoidStr, cat_backends::CatError> {
        let aa = tensor(carrier, carrier);
        let one = unit_obj(&carrier.cat);
        Ok(MonoidStr {
            carrier: carrier.clone(),
            mul: Mor::new(&aa, carrier, mul)?,
            unit: Mor::new(&one, carrier, unit)?,
        })
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim
    }

    pub fn validate(&self) -> Report {
        let mut r = Report::new();
        let a = &self.carrier;
        let aa = tensor(a, a);
        let one = unit_obj(&a.cat);
        if !shape_ok(&mut r, "mul", &self.mul, &aa, a)
            || !shape_ok(&mut r, "unit", &self.unit, &one, a)
        {
            return r;
        }
        if !self.mul.is_valid() {
            r.push("mul-morphism", vec![]);
        }
        if !self.unit.is_valid() {
            r.push("unit-morphism", vec![]);
        }
        let m = &self.mul.matrix;
        let i = &id(a).matrix;
        r.check_eq("associativity", &m.mul(&m.kron(i)), &m.mul(&i.kron(m)));
        r.check_eq("left-unit", &m.mul(&self.unit.matrix.kron(i)), i);
        r.check_eq("right-unit", &m.mul(&i.kron(&self.unit.matrix)), i);
        r
    }
}

impl ComonoidStr {
    pub fn new(
        carrier: &Obj,
        comul: Matrix,
        counit: Matrix,
    ) -> Result<ComonoidStr, cat_backends::CatError> {
        let pp = tensor(carrier, carrier);
        let one = unit_obj(&carrier.cat);
        Ok(ComonoidStr {
            carrier: carrier.clone(),
            comul: Mor::new(carrier, &pp, comul)?,
            counit: Mor::new(carrier, &one, counit)?,
        })
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim
    }

    pub fn validate(&self) -> Report {
        let mut r = Report::new();
        let p = &self.carrier;
        let pp = tensor(p, p);
        let one = unit_obj(&p.cat);
        if !shape_ok(&mut r, "comul", &self.comul, p, &pp)
            || !shape_ok(&mut r, "counit", &self.counit, p, &one)
        {
            return r;
        }
        if !self.comul.is_valid() {
            r.push("comul-morphism", vec![]);
        }
        if !self.counit.is_valid() {
            r.push("counit-morphism", vec![]);
        }
        let d = &self.comul.matrix;
        let e = &self.counit.matrix;
        let i = &id(p).matrix;
        r.check_eq("coassociativity", &d.kron(i).mul(d), &i.kron(d).mul(d));
        r.check_eq("left-counit", &e.kron(i).mul(d), i);
        r.check_eq("right-counit", &i.kron(e).mul(d), i);
        r
    }
}

impl BimonoidStr {
    pub fn validate(&self) -> Report {
        let mut r = self.monoid.validate();
        r.extend(self.comonoid.validate());
        if self.monoid.carrier != self.comonoid.carrier {
            r.push("carrier", vec![]);
            return r;
        }
        if !r.is_ok() {
            return r;
        }
        let h = &self.monoid.carrier;
        let f = h.field();
        let (m, u) = (&self.monoid.mul.matrix, &self.monoid.unit.matrix);
        let (d, e) = (&self.comonoid.comul.matrix, &self.comonoid.counit.matrix);
        let c = braid(h, h).matrix;
        r.check_eq(
            "comul-multiplicative",
            &d.mul(m),
            &braided_comul_product(m, d, &c),
        );
        r.check_eq("comul-unital", &d.mul(u), &u.kron(u));
        r.check_eq("counit-multiplicative", &e.mul(m), &e.kron(e));
        r.check_eq("counit-unital", &e.mul(u), &Matrix::identity(f, 1));
        r
    }
}

impl HopfStr {
    pub fn validate(&self) -> Report {
        let mut r = self.bimonoid.validate();
        if !r.is_ok() {
            return r;
        }
        let h = &self.bimonoid.monoid.carrier;
        let f = h.field();
        let (m, u) = (
            &self.bimonoid.monoid.mul.matrix,
            &self.bimonoid.monoid.unit.matrix,
        );
        let (d, e) = (
            &self.bimonoid.comonoid.comul.matrix,
            &self.bimonoid.comonoid.counit.matrix,
        );
        let s = &self.antipode.matrix;
        let i = Matrix::identity(f, h.dim);
        if !self.antipode.is_valid() {
            r.push("antipode-morphism", vec![]);
        }
        let ue = u.mul(e);
        r.check_eq("left-antipode", &m.mul(&s.kron(&i)).mul(d), &ue);
        r.check_eq("right-antipode", &m.mul(&i.kron(s)).mul(d), &ue);
        r.check_eq("antipode-inverse", &s.mul(&self.antipode_inv.matrix), &i);
        r.check_eq("antipode-inverse", &self.antipode_inv.matrix.mul(s), &i);
        r
    }
}

pub fn validate_structure(s: &AnyStructure) -> Report {
    match s {
        AnyStructure::Monoid(m) => m.validate(),
        AnyStructure::Comonoid(c) => c.validate(),
        AnyStructure::Bimonoid(b) => b.validate(),
        AnyStructure::Hopf(h) => h.validate(),
    }
}

/// Product monoid structure on A⊗B, using the braiding c_{B,A} in the middle.
pub fn tensor_monoid(a: &MonoidStr, b: &MonoidStr) -> MonoidStr {
    let (x, y) = (&a.carrier, &b.carrier);
    let mid = tensor_mor(&tensor_mor(&id(x), &braid(y, x)), &id(y));
    let mul = tensor_mor(&a.mul, &b.mul).after(&mid);
    let carrier = tensor(x, y);
    let unit = tensor_mor(&a.unit, &b.unit);
    let one = unit_obj(&x.cat);
    MonoidStr {
        mul: Mor::new(&tensor(&carrier, &carrier), &carrier, mul.matrix).expect("shape"),
        unit: Mor::new(&one, &carrier, unit.matrix).expect("shape"),
        carrier,
    }
}

/// Coproduct comonoid structure on P⊗Q, using c_{P,Q} in the middle.
pub fn tensor_comonoid(p: &ComonoidStr, q: &ComonoidStr) -> ComonoidStr {
    let (x, y) = (&p.carrier, &q.carrier);
    let mid = tensor_mor(&tensor_mor(&id(x), &braid(x, y)), &id(y));
    let comul = mid.after(&tensor_mor(&p.comul, &q.comul));
    let carrier = tensor(x, y);
    let counit = tensor_mor(&p.counit, &q.counit);
    let one = unit_obj(&x.cat);
    ComonoidStr {
        comul: Mor::new(&carrier, &tensor(&carrier, &carrier), comul.matrix).expect("shape"),
        counit: Mor::new(&carrier, &one, counit.matrix).expect("shape"),
        carrier,
    }
}
