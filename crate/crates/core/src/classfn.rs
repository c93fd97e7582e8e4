//! Class functions and exact inner products.

use std::sync::Arc;

use crate::cyclo::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::group::{ConjugacyData, FiniteGroup};

/// A group together with its conjugacy-class data; the shared context for
/// class functions.
#[derive(Clone, Debug)]
pub struct ClassContext {
    pub group: Arc<FiniteGroup>,
    pub conj: ConjugacyData,
}

impl ClassContext {
    pub fn new(group: FiniteGroup) -> Self {
        let conj = group.conjugacy_classes();
        ClassContext { group: Arc::new(group), conj }
    }

    pub fn num_classes(&self) -> usize {
        self.conj.classes.len()
    }

    fn same_as(&self, other: &ClassContext) -> bool {
        Arc::ptr_eq(&self.group, &other.group)
            || (self.group.order() == other.group.order()
                && self.group.degree() == other.group.degree()
                && self.conj.representatives == other.conj.representatives
                && self.group.generators() == other.group.generators())
    }
}

/// An exact class function: one cyclotomic value per conjugacy class.
#[derive(Clone, Debug)]
pub struct ClassFunction {
    pub ctx: Arc<ClassContext>,
    pub values: Vec<Cyclotomic>,
}

impl ClassFunction {
    pub fn new(ctx: Arc<ClassContext>, values: Vec<Cyclotomic>) -> Self {
        assert_eq!(values.len(), ctx.num_classes());
        ClassFunction { ctx, values }
    }

    pub fn constant(ctx: Arc<ClassContext>, v: Cyclotomic) -> Self {
        let n = ctx.num_classes();
        ClassFunction { ctx, values: vec![v; n] }
    }

    /// Value at the class of group element `g`.
    pub fn value_at_element(&self, g: usize) -> &Cyclotomic {
        &self.values[self.ctx.conj.class_of[g]]
    }

    pub fn degree(&self) -> &Cyclotomic {
        self.value_at_element(0)
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        if !self.ctx.same_as(&other.ctx) {
            return Err(Error::GroupMismatch);
        }
        Ok(ClassFunction {
            ctx: self.ctx.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.add(&other.scale(&Rational::from(num_bigint::BigInt::from(-1))))
    }

    pub fn scale(&self, r: &Rational) -> ClassFunction {
        ClassFunction {
            ctx: self.ctx.clone(),
            values: self.values.iter().map(|v| v.scale(r)).collect(),
        }
    }

    pub fn mul_pointwise(&self, other: &ClassFunction) -> Result<ClassFunction> {
        if !self.ctx.same_as(&other.ctx) {
            return Err(Error::GroupMismatch);
        }
        Ok(ClassFunction {
            ctx: self.ctx.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.mul(b))
                .collect(),
        })
    }
}

/// `|G|^-1 sum_g a(g) conj(b(g))`, computed class-wise, exactly.
pub fn inner_product(a: &ClassFunction, b: &ClassFunction) -> Result<Cyclotomic> {
    if !a.ctx.same_as(&b.ctx) {
        return Err(Error::GroupMismatch);
    }
    let mut acc = Cyclotomic::zero();
    for (c, (x, y)) in a.ctx.conj.classes.iter().zip(a.values.iter().zip(&b.values)) {
        if x.is_zero() || y.is_zero() {
            continue;
        }
        let term = x.mul(&y.conj()).scale(&crate::cyclo::rat_int(c.len() as i64));
        acc = acc.add(&term);
    }
    let order = crate::cyclo::rat(1, a.ctx.group.order() as i64);
    Ok(acc.scale(&order))
}
