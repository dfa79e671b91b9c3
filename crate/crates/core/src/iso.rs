//! Isomorphisms as pairs of mutually inverse functions, and the ways of
//! moving operations across them.

use crate::error::Result;
use crate::numutil::Nat;
use std::fmt;
use std::sync::Arc;

/// Every encoder bottoms out in finite sequences of naturals.
pub type Root = Vec<Nat>;

type Func<A, B> = Arc<dyn Fn(&A) -> Result<B> + Send + Sync>;

/// A bijection between `A` and `B`: `from` goes A -> B, `to` goes B -> A.
pub struct Iso<A, B> {
    from: Func<A, B>,
    to: Func<B, A>,
}

impl<A, B> Clone for Iso<A, B> {
    fn clone(&self) -> Self {
        Iso {
            from: self.from.clone(),
            to: self.to.clone(),
        }
    }
}

impl<A, B> fmt::Debug for Iso<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Iso")
    }
}

impl<A: 'static, B: 'static> Iso<A, B> {
    pub fn new(
        from: impl Fn(&A) -> Result<B> + Send + Sync + 'static,
        to: impl Fn(&B) -> Result<A> + Send + Sync + 'static,
    ) -> Self {
        Iso {
            from: Arc::new(from),
            to: Arc::new(to),
        }
    }

    pub fn from(&self, a: &A) -> Result<B> {
        (self.from)(a)
    }

    pub fn to(&self, b: &B) -> Result<A> {
        (self.to)(b)
    }

    /// `self` then `next`.
    pub fn compose<C: 'static>(&self, next: &Iso<B, C>) -> Iso<A, C> {
        let (f1, g1) = (self.from.clone(), self.to.clone());
        let (f2, g2) = (next.from.clone(), next.to.clone());
        Iso {
            from: Arc::new(move |a| f2(&f1(a)?)),
            to: Arc::new(move |c| g1(&g2(c)?)),
        }
    }

    pub fn invert(&self) -> Iso<B, A> {
        Iso {
            from: self.to.clone(),
            to: self.from.clone(),
        }
    }
}

impl<A: Clone + 'static> Iso<A, A> {
    pub fn itself() -> Self {
        Iso::new(|a: &A| Ok(a.clone()), |a: &A| Ok(a.clone()))
    }
}

/// Apply `h`, an operation on `A`, to a `B` value: `iso.from(h(iso.to(x)))`.
pub fn borrow<A: 'static, B: 'static>(iso: &Iso<A, B>, h: impl FnOnce(A) -> A, x: &B) -> Result<B> {
    iso.from(&h(iso.to(x)?))
}

pub fn borrow2<A: 'static, B: 'static>(
    iso: &Iso<A, B>,
    op: impl FnOnce(A, A) -> A,
    x: &B,
    y: &B,
) -> Result<B> {
    iso.from(&op(iso.to(x)?, iso.to(y)?))
}

pub fn try_borrow2<A: 'static, B: 'static>(
    iso: &Iso<A, B>,
    op: impl FnOnce(A, A) -> Result<A>,
    x: &B,
    y: &B,
) -> Result<B> {
    iso.from(&op(iso.to(x)?, iso.to(y)?)?)
}

/// Like [`borrow2`] for any number of arguments.
pub fn borrow_n<A: 'static, B: 'static>(
    iso: &Iso<A, B>,
    op: impl FnOnce(Vec<A>) -> A,
    xs: &[B],
) -> Result<B> {
    let args = xs.iter().map(|x| iso.to(x)).collect::<Result<Vec<_>>>()?;
    iso.from(&op(args))
}

pub fn lend<A: 'static, B: 'static>(iso: &Iso<A, B>, h: impl FnOnce(B) -> B, x: &A) -> Result<A> {
    borrow(&iso.invert(), h, x)
}

pub fn lend2<A: 'static, B: 'static>(
    iso: &Iso<A, B>,
    op: impl FnOnce(B, B) -> B,
    x: &A,
    y: &A,
) -> Result<A> {
    borrow2(&iso.invert(), op, x, y)
}

/// Run `op` on the image of `x`.
pub fn fit<A: 'static, B: 'static, R>(op: impl FnOnce(B) -> R, iso: &Iso<A, B>, x: &A) -> Result<R> {
    Ok(op(iso.from(x)?))
}

/// Run `op` on the preimage of `x`.
pub fn retrofit<A: 'static, B: 'static, R>(
    op: impl FnOnce(A) -> R,
    iso: &Iso<A, B>,
    x: &B,
) -> Result<R> {
    Ok(op(iso.to(x)?))
}

/// A named isomorphism onto [`Root`].
pub struct Encoder<A> {
    name: String,
    iso: Iso<A, Root>,
}

impl<A> Clone for Encoder<A> {
    fn clone(&self) -> Self {
        Encoder {
            name: self.name.clone(),
            iso: self.iso.clone(),
        }
    }
}

impl<A> fmt::Debug for Encoder<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Encoder({})", self.name)
    }
}

impl<A: 'static> Encoder<A> {
    pub fn new(name: impl Into<String>, iso: Iso<A, Root>) -> Self {
        Encoder {
            name: name.into(),
            iso,
        }
    }

    /// `iso` followed by `inner`.
    pub fn via<B: 'static>(name: impl Into<String>, iso: Iso<A, B>, inner: &Encoder<B>) -> Self {
        Encoder::new(name, iso.compose(&inner.iso))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn iso(&self) -> &Iso<A, Root> {
        &self.iso
    }

    pub fn from(&self, a: &A) -> Result<Root> {
        self.iso.from(a)
    }

    pub fn to(&self, r: &Root) -> Result<A> {
        self.iso.to(r)
    }
}

/// `with(this, that)`: the isomorphism from `this`'s values to `that`'s values.
pub fn with<A: 'static, B: 'static>(this: &Encoder<A>, that: &Encoder<B>) -> Iso<A, B> {
    this.iso.compose(&that.iso.invert())
}

/// Convert `x`, a value of `source`, to the corresponding value of `target`.
pub fn convert<A: 'static, B: 'static>(target: &Encoder<A>, source: &Encoder<B>, x: &B) -> Result<A> {
    target.to(&source.from(x)?)
}

/// Run a binary operation defined on `other`'s values on values of `this`.
pub fn borrow_from<A: 'static, B: 'static>(
    other: &Encoder<A>,
    op: impl FnOnce(A, A) -> A,
    this: &Encoder<B>,
    x: &B,
    y: &B,
) -> Result<B> {
    borrow2(&with(this, other).invert(), op, x, y)
}

/// [`borrow_from`] spelled out with explicit conversions; the two agree.
pub fn borrow_from_direct<A: 'static, B: 'static>(
    other: &Encoder<A>,
    op: impl FnOnce(A, A) -> A,
    this: &Encoder<B>,
    x: &B,
    y: &B,
) -> Result<B> {
    let x2 = convert(other, this, x)?;
    let y2 = convert(other, this, y)?;
    convert(this, other, &op(x2, y2))
}

pub fn try_borrow_from<A: 'static, B: 'static>(
    other: &Encoder<A>,
    op: impl FnOnce(A, A) -> Result<A>,
    this: &Encoder<B>,
    x: &B,
    y: &B,
) -> Result<B> {
    try_borrow2(&with(this, other).invert(), op, x, y)
}
