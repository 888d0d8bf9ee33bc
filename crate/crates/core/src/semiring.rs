//! Commutative semirings: built-in antirings, table-defined finite
//! semirings and the exhaustive axiom checker.
//!
//! Values are stored untyped as [`Value`] and interpreted by a
//! [`Semiring`] descriptor. Matrices carry one descriptor for all of their
//! entries; the scalar API goes through [`Element`], which pairs a value
//! with its descriptor and refuses to combine elements of different
//! semirings.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Largest finite carrier that [`Semiring::elements`] will materialize.
pub const MAX_MATERIALIZED_CARRIER: u128 = 1 << 20;

/// Largest `m` accepted by [`Semiring::powerset`]; subsets are bitmasks.
pub const MAX_POWERSET_BASE: u32 = 64;

/// A carrier value. Which variant is meaningful depends on the semiring:
///
/// | semiring      | variant            |
/// |---------------|--------------------|
/// | boolean, chain| `Level(0..q)`      |
/// | powerset(m)   | `Set(mask)`, bit `k - 1` holds element `k` |
/// | naturals      | `Nat`              |
/// | tropical      | `Trop(None)` is `inf`, `Trop(Some(x))` is finite |
/// | table         | `Index`            |
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Value {
    Level(u32),
    Set(u64),
    Nat(BigUint),
    Trop(Option<BigInt>),
    Index(u32),
}

/// Addition and multiplication tables of a finite semiring on `0..size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteTables {
    size: usize,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    zero: usize,
    one: usize,
}

impl FiniteTables {
    /// Checks that both tables are `size x size` and every entry, as well as
    /// `zero` and `one`, is a carrier index. Errors name the offending cell
    /// (1-based row and column).
    pub fn new(
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        zero: usize,
        one: usize,
    ) -> Result<Self> {
        let size = add.len();
        if size == 0 {
            return Err(Error::MalformedTables("size must be positive".into()));
        }
        for (name, table) in [("add", &add), ("mul", &mul)] {
            if table.len() != size {
                return Err(Error::MalformedTables(format!(
                    "{name} table has {} rows, expected {size}",
                    table.len()
                )));
            }
            for (i, row) in table.iter().enumerate() {
                if row.len() != size {
                    return Err(Error::MalformedTables(format!(
                        "{name} row {} has {} entries, expected {size}",
                        i + 1,
                        row.len()
                    )));
                }
                if let Some(j) = row.iter().position(|&v| v >= size) {
                    return Err(Error::MalformedTables(format!(
                        "{name} cell ({}, {}) = {} is out of range 0..{}",
                        i + 1,
                        j + 1,
                        row[j],
                        size - 1
                    )));
                }
            }
        }
        for (name, v) in [("zero", zero), ("one", one)] {
            if v >= size {
                return Err(Error::MalformedTables(format!(
                    "{name} index {v} is out of range 0..{}",
                    size - 1
                )));
            }
        }
        Ok(FiniteTables {
            size,
            add,
            mul,
            zero,
            one,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn add_table(&self) -> &[Vec<usize>] {
        &self.add
    }

    pub fn mul_table(&self) -> &[Vec<usize>] {
        &self.mul
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a][b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }
}

/// A law checked by [`validate_axioms`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Law {
    AddAssociative,
    AddCommutative,
    AddIdentity,
    MulAssociative,
    MulIdentity,
    LeftDistributive,
    RightDistributive,
    ZeroAnnihilates,
    MulCommutative,
    Zerosumfree,
    Entire,
    NoNonzeroNilpotents,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Law::AddAssociative => "(a+b)+c = a+(b+c)",
            Law::AddCommutative => "a+b = b+a",
            Law::AddIdentity => "a+0 = a",
            Law::MulAssociative => "(ab)c = a(bc)",
            Law::MulIdentity => "1a = a1 = a",
            Law::LeftDistributive => "a(b+c) = ab+ac",
            Law::RightDistributive => "(a+b)c = ac+bc",
            Law::ZeroAnnihilates => "0a = a0 = 0",
            Law::MulCommutative => "ab = ba",
            Law::Zerosumfree => "a+b = 0 implies a = b = 0",
            Law::Entire => "ab = 0 implies a = 0 or b = 0",
            Law::NoNonzeroNilpotents => "x^k = 0 implies x = 0",
        };
        f.write_str(s)
    }
}

/// A failed law together with the carrier indices that violate it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub law: Law,
    pub witness: Vec<usize>,
}

/// Result of [`validate_axioms`]. Each flag holds exactly when the
/// corresponding violation is absent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub semiring: Option<Violation>,
    pub commutative: Option<Violation>,
    pub zerosumfree: Option<Violation>,
    pub entire: Option<Violation>,
    pub nilpotents: Option<Violation>,
}

impl AxiomReport {
    pub fn is_semiring(&self) -> bool {
        self.semiring.is_none()
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative.is_none()
    }

    pub fn is_zerosumfree(&self) -> bool {
        self.zerosumfree.is_none()
    }

    pub fn is_entire(&self) -> bool {
        self.entire.is_none()
    }

    pub fn has_no_nonzero_nilpotents(&self) -> bool {
        self.nilpotents.is_none()
    }

    /// `(flag name, violation)` in a fixed order, for reporting.
    pub fn flags(&self) -> [(&'static str, Option<&Violation>); 5] {
        [
            ("is_semiring", self.semiring.as_ref()),
            ("is_commutative", self.commutative.as_ref()),
            ("is_zerosumfree", self.zerosumfree.as_ref()),
            ("is_entire", self.entire.as_ref()),
            (
                "has_no_nonzero_nilpotents",
                self.nilpotents.as_ref(),
            ),
        ]
    }
}

fn first_violation<const K: usize>(
    size: usize,
    law: Law,
    mut holds: impl FnMut([usize; K]) -> bool,
) -> Option<Violation> {
    let mut idx = [0usize; K];
    loop {
        if !holds(idx) {
            return Some(Violation {
                law,
                witness: idx.to_vec(),
            });
        }
        // row-major odometer
        let mut pos = K;
        loop {
            if pos == 0 {
                return None;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < size {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Exhaustively checks the semiring laws plus commutativity of `*`,
/// zerosumfreeness, entireness and absence of nonzero nilpotents.
///
/// Every witness is the first counterexample in row-major order over the
/// carrier indices. A degenerate table (`zero == one`) is reported like any
/// other.
pub fn validate_axioms(t: &FiniteTables) -> AxiomReport {
    let n = t.size;
    let (z, o) = (t.zero, t.one);

    let semiring = first_violation(n, Law::AddAssociative, |[a, b, c]| {
        t.add(t.add(a, b), c) == t.add(a, t.add(b, c))
    })
    .or_else(|| first_violation(n, Law::AddCommutative, |[a, b]| t.add(a, b) == t.add(b, a)))
    .or_else(|| {
        first_violation(n, Law::AddIdentity, |[a]| {
            t.add(a, z) == a && t.add(z, a) == a
        })
    })
    .or_else(|| {
        first_violation(n, Law::MulAssociative, |[a, b, c]| {
            t.mul(t.mul(a, b), c) == t.mul(a, t.mul(b, c))
        })
    })
    .or_else(|| {
        first_violation(n, Law::MulIdentity, |[a]| {
            t.mul(a, o) == a && t.mul(o, a) == a
        })
    })
    .or_else(|| {
        first_violation(n, Law::LeftDistributive, |[a, b, c]| {
            t.mul(a, t.add(b, c)) == t.add(t.mul(a, b), t.mul(a, c))
        })
    })
    .or_else(|| {
        first_violation(n, Law::RightDistributive, |[a, b, c]| {
            t.mul(t.add(a, b), c) == t.add(t.mul(a, c), t.mul(b, c))
        })
    })
    .or_else(|| {
        first_violation(n, Law::ZeroAnnihilates, |[a]| {
            t.mul(z, a) == z && t.mul(a, z) == z
        })
    });

    let commutative =
        first_violation(n, Law::MulCommutative, |[a, b]| t.mul(a, b) == t.mul(b, a));

    let zerosumfree = first_violation(n, Law::Zerosumfree, |[a, b]| {
        t.add(a, b) != z || (a == z && b == z)
    });

    let entire = first_violation(n, Law::Entire, |[a, b]| {
        a == z || b == z || t.mul(a, b) != z
    });

    // In a finite monoid the powers of x cycle within `size` steps.
    let nilpotents = first_violation(n, Law::NoNonzeroNilpotents, |[x]| {
        if x == z {
            return true;
        }
        let mut p = x;
        for _ in 1..n {
            if p == z {
                return false;
            }
            p = t.mul(p, x);
        }
        p != z
    });

    AxiomReport {
        semiring,
        commutative,
        zerosumfree,
        entire,
        nilpotents,
    }
}

/// A finite commutative semiring given by tables, with its axiom report.
#[derive(Debug)]
pub struct TableSemiring {
    name: String,
    tables: FiniteTables,
    report: AxiomReport,
}

impl TableSemiring {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn tables(&self) -> &FiniteTables {
        &self.tables
    }

    pub fn report(&self) -> &AxiomReport {
        &self.report
    }
}

impl PartialEq for TableSemiring {
    fn eq(&self, other: &Self) -> bool {
        self.tables == other.tables
    }
}

impl Eq for TableSemiring {}

/// Descriptor of a concrete commutative semiring.
///
/// `Boolean` and `Chain(2)` describe the same semiring and compare equal.
#[derive(Clone, Debug)]
pub enum Semiring {
    /// `{0, 1}` with OR and AND.
    Boolean,
    /// `{0, .., q-1}` with max and min.
    Chain(u32),
    /// Subsets of `{1, .., m}` with union and intersection.
    Powerset(u32),
    /// Nonnegative integers, arbitrary precision.
    Naturals,
    /// Integers with `+inf`, min as addition and integer sum as
    /// multiplication.
    Tropical,
    Table(Arc<TableSemiring>),
}

impl PartialEq for Semiring {
    fn eq(&self, other: &Self) -> bool {
        use Semiring::*;
        match (self, other) {
            (Boolean | Chain(2), Boolean | Chain(2)) => true,
            (Chain(a), Chain(b)) => a == b,
            (Powerset(a), Powerset(b)) => a == b,
            (Naturals, Naturals) | (Tropical, Tropical) => true,
            (Table(a), Table(b)) => Arc::ptr_eq(a, b) || a == b,
            _ => false,
        }
    }
}

impl Eq for Semiring {}

impl fmt::Display for Semiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Semiring::Boolean => f.write_str("boolean"),
            Semiring::Chain(q) => write!(f, "chain:{q}"),
            Semiring::Powerset(m) => write!(f, "powerset:{m}"),
            Semiring::Naturals => f.write_str("naturals"),
            Semiring::Tropical => f.write_str("tropical"),
            Semiring::Table(t) => write!(f, "table:{}", t.name),
        }
    }
}

impl Semiring {
    pub fn chain(q: u32) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidSemiring("chain(q) requires q >= 1".into()));
        }
        Ok(Semiring::Chain(q))
    }

    pub fn powerset(m: u32) -> Result<Self> {
        if m > MAX_POWERSET_BASE {
            return Err(Error::InvalidSemiring(format!(
                "powerset(m) supports m <= {MAX_POWERSET_BASE}"
            )));
        }
        Ok(Semiring::Powerset(m))
    }

    /// Wraps validated tables. The tables must form a commutative semiring;
    /// further properties (zerosumfree, entire, ...) are recorded in the
    /// report and checked by the operations that need them.
    pub fn table(name: impl Into<String>, tables: FiniteTables) -> Result<Self> {
        let report = validate_axioms(&tables);
        if let Some(v) = report.semiring.as_ref().or(report.commutative.as_ref()) {
            return Err(Error::NotCommutativeSemiring(format!(
                "{} fails at {:?}",
                v.law, v.witness
            )));
        }
        if tables.size > u32::MAX as usize {
            return Err(Error::MalformedTables("carrier too large".into()));
        }
        Ok(Semiring::Table(Arc::new(TableSemiring {
            name: name.into(),
            tables,
            report,
        })))
    }

    pub fn zero(&self) -> Value {
        match self {
            Semiring::Boolean | Semiring::Chain(_) => Value::Level(0),
            Semiring::Powerset(_) => Value::Set(0),
            Semiring::Naturals => Value::Nat(BigUint::zero()),
            Semiring::Tropical => Value::Trop(None),
            Semiring::Table(t) => Value::Index(t.tables.zero as u32),
        }
    }

    pub fn one(&self) -> Value {
        match self {
            Semiring::Boolean => Value::Level(1),
            Semiring::Chain(q) => Value::Level(q - 1),
            Semiring::Powerset(m) => Value::Set(full_mask(*m)),
            Semiring::Naturals => Value::Nat(BigUint::one()),
            Semiring::Tropical => Value::Trop(Some(BigInt::zero())),
            Semiring::Table(t) => Value::Index(t.tables.one as u32),
        }
    }

    pub fn is_zero(&self, v: &Value) -> bool {
        match (self, v) {
            (Semiring::Boolean | Semiring::Chain(_), Value::Level(x)) => *x == 0,
            (Semiring::Powerset(_), Value::Set(x)) => *x == 0,
            (Semiring::Naturals, Value::Nat(x)) => x.is_zero(),
            (Semiring::Tropical, Value::Trop(x)) => x.is_none(),
            (Semiring::Table(t), Value::Index(x)) => *x as usize == t.tables.zero,
            _ => unreachable!("{v:?} is not a value of {self}"),
        }
    }

    pub fn is_one(&self, v: &Value) -> bool {
        *v == self.one()
    }

    /// Carrier addition. Both values must belong to this semiring.
    pub fn add(&self, a: &Value, b: &Value) -> Value {
        match (self, a, b) {
            (Semiring::Boolean | Semiring::Chain(_), Value::Level(x), Value::Level(y)) => {
                Value::Level(*x.max(y))
            }
            (Semiring::Powerset(_), Value::Set(x), Value::Set(y)) => Value::Set(x | y),
            (Semiring::Naturals, Value::Nat(x), Value::Nat(y)) => Value::Nat(x + y),
            (Semiring::Tropical, Value::Trop(x), Value::Trop(y)) => Value::Trop(match (x, y) {
                (None, v) | (v, None) => v.clone(),
                (Some(x), Some(y)) => Some(x.min(y).clone()),
            }),
            (Semiring::Table(t), Value::Index(x), Value::Index(y)) => {
                Value::Index(t.tables.add(*x as usize, *y as usize) as u32)
            }
            _ => unreachable!("operands {a:?}, {b:?} are not values of {self}"),
        }
    }

    /// Carrier multiplication. Both values must belong to this semiring.
    pub fn mul(&self, a: &Value, b: &Value) -> Value {
        match (self, a, b) {
            (Semiring::Boolean | Semiring::Chain(_), Value::Level(x), Value::Level(y)) => {
                Value::Level(*x.min(y))
            }
            (Semiring::Powerset(_), Value::Set(x), Value::Set(y)) => Value::Set(x & y),
            (Semiring::Naturals, Value::Nat(x), Value::Nat(y)) => Value::Nat(x * y),
            (Semiring::Tropical, Value::Trop(x), Value::Trop(y)) => Value::Trop(match (x, y) {
                (Some(x), Some(y)) => Some(x + y),
                _ => None,
            }),
            (Semiring::Table(t), Value::Index(x), Value::Index(y)) => {
                Value::Index(t.tables.mul(*x as usize, *y as usize) as u32)
            }
            _ => unreachable!("operands {a:?}, {b:?} are not values of {self}"),
        }
    }

    /// Sum of an iterator of values; the empty sum is zero.
    pub fn sum<'a>(&self, values: impl IntoIterator<Item = &'a Value>) -> Value {
        values
            .into_iter()
            .fold(self.zero(), |acc, v| self.add(&acc, v))
    }

    /// Product of an iterator of values; the empty product is one.
    pub fn product<'a>(&self, values: impl IntoIterator<Item = &'a Value>) -> Value {
        values
            .into_iter()
            .fold(self.one(), |acc, v| self.mul(&acc, v))
    }

    pub fn contains(&self, v: &Value) -> bool {
        match (self, v) {
            (Semiring::Boolean, Value::Level(x)) => *x <= 1,
            (Semiring::Chain(q), Value::Level(x)) => x < q,
            (Semiring::Powerset(m), Value::Set(x)) => x & !full_mask(*m) == 0,
            (Semiring::Naturals, Value::Nat(_)) | (Semiring::Tropical, Value::Trop(_)) => true,
            (Semiring::Table(t), Value::Index(x)) => (*x as usize) < t.tables.size,
            _ => false,
        }
    }

    /// `0 = 1`: the trivial semiring, rejected by all matrix operations.
    pub fn is_degenerate(&self) -> bool {
        self.is_zero(&self.one())
    }

    /// Number of carrier elements, `None` for infinite carriers.
    pub fn carrier_size(&self) -> Option<u128> {
        match self {
            Semiring::Boolean => Some(2),
            Semiring::Chain(q) => Some(*q as u128),
            Semiring::Powerset(m) => Some(1u128 << m),
            Semiring::Naturals | Semiring::Tropical => None,
            Semiring::Table(t) => Some(t.tables.size as u128),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.carrier_size().is_some()
    }

    /// All carrier elements in canonical order: levels ascending, subsets by
    /// bitmask, table indices ascending.
    pub fn elements(&self) -> Result<Vec<Value>> {
        let size = self.finite_size("enumerate the carrier")?;
        if size > MAX_MATERIALIZED_CARRIER {
            return Err(Error::Unsupported {
                semiring: self.to_string(),
                operation: "enumerate a carrier this large",
            });
        }
        Ok((0..size as usize).map(|i| self.value_at(i)).collect())
    }

    /// Position of `v` in the canonical order of a finite carrier.
    pub fn index_of(&self, v: &Value) -> Option<usize> {
        match (self, v) {
            (Semiring::Boolean | Semiring::Chain(_), Value::Level(x)) => Some(*x as usize),
            (Semiring::Powerset(_), Value::Set(x)) => usize::try_from(*x).ok(),
            (Semiring::Table(_), Value::Index(x)) => Some(*x as usize),
            _ => None,
        }
    }

    /// Inverse of [`Semiring::index_of`]; `i` must be below the carrier size.
    pub fn value_at(&self, i: usize) -> Value {
        match self {
            Semiring::Boolean | Semiring::Chain(_) => Value::Level(i as u32),
            Semiring::Powerset(_) => Value::Set(i as u64),
            Semiring::Table(_) => Value::Index(i as u32),
            Semiring::Naturals | Semiring::Tropical => {
                unreachable!("{self} has no canonical indexing")
            }
        }
    }

    fn finite_size(&self, operation: &'static str) -> Result<u128> {
        self.carrier_size().ok_or_else(|| Error::Unsupported {
            semiring: self.to_string(),
            operation,
        })
    }

    /// The multiplicative inverse of `a`, if `a` is a unit.
    pub fn inverse(&self, a: &Value) -> Option<Value> {
        match (self, a) {
            (Semiring::Boolean | Semiring::Chain(_) | Semiring::Powerset(_), _) => {
                self.is_one(a).then(|| a.clone())
            }
            (Semiring::Naturals, Value::Nat(x)) => x.is_one().then(|| a.clone()),
            (Semiring::Tropical, Value::Trop(x)) => x.as_ref().map(|x| Value::Trop(Some(-x))),
            (Semiring::Table(t), Value::Index(x)) => {
                let (x, one) = (*x as usize, t.tables.one);
                (0..t.tables.size)
                    .find(|&b| t.tables.mul(x, b) == one && t.tables.mul(b, x) == one)
                    .map(|b| Value::Index(b as u32))
            }
            _ => None,
        }
    }

    pub fn is_unit(&self, a: &Value) -> bool {
        self.inverse(a).is_some()
    }

    /// All `x` with `x * x = x`, in canonical order.
    pub fn idempotents(&self) -> Result<Vec<Value>> {
        self.finite_size("list idempotents")?;
        Ok(self
            .elements()?
            .into_iter()
            .filter(|x| self.mul(x, x) == *x)
            .collect())
    }

    pub fn is_zerosumfree(&self) -> bool {
        match self {
            Semiring::Table(t) => t.report.is_zerosumfree(),
            _ => true,
        }
    }

    /// No zero divisors. `powerset(m)` is entire only for `m <= 1`.
    pub fn is_entire(&self) -> bool {
        match self {
            Semiring::Powerset(m) => *m <= 1,
            Semiring::Table(t) => t.report.is_entire(),
            _ => true,
        }
    }

    pub fn has_no_nonzero_nilpotents(&self) -> bool {
        match self {
            Semiring::Table(t) => t.report.has_no_nonzero_nilpotents(),
            _ => true,
        }
    }

    /// Zerosumfree commutative semiring. All descriptors are commutative
    /// semirings by construction.
    pub fn is_antiring(&self) -> bool {
        self.is_zerosumfree()
    }

    /// Materializes the operation tables over the canonical carrier order.
    pub fn to_tables(&self) -> Result<FiniteTables> {
        let elems = self.elements()?;
        let index = |v: &Value| self.index_of(v).expect("finite carrier value");
        let table = |op: &dyn Fn(&Value, &Value) -> Value| -> Vec<Vec<usize>> {
            elems
                .iter()
                .map(|a| elems.iter().map(|b| index(&op(a, b))).collect())
                .collect()
        };
        FiniteTables::new(
            table(&|a, b| self.add(a, b)),
            table(&|a, b| self.mul(a, b)),
            index(&self.zero()),
            index(&self.one()),
        )
    }

    /// Parses an element literal: integers for boolean/chain/naturals,
    /// `inf` or an integer for tropical, `{}` or `{1,3}` for powerset,
    /// carrier indices for tables.
    pub fn parse_value(&self, literal: &str) -> Result<Value> {
        let s = literal.trim();
        let invalid = || Error::InvalidElement {
            semiring: self.to_string(),
            literal: literal.into(),
        };
        let v = match self {
            Semiring::Boolean | Semiring::Chain(_) => {
                Value::Level(s.parse().map_err(|_| invalid())?)
            }
            Semiring::Powerset(_) => {
                let inner = s
                    .strip_prefix('{')
                    .and_then(|r| r.strip_suffix('}'))
                    .ok_or_else(invalid)?
                    .trim();
                let mut mask = 0u64;
                if !inner.is_empty() {
                    for part in inner.split(',') {
                        let k: u32 = part.trim().parse().map_err(|_| invalid())?;
                        if k == 0 || k > MAX_POWERSET_BASE {
                            return Err(invalid());
                        }
                        mask |= 1 << (k - 1);
                    }
                }
                Value::Set(mask)
            }
            Semiring::Naturals => Value::Nat(s.parse().map_err(|_| invalid())?),
            Semiring::Tropical => {
                if s == "inf" {
                    Value::Trop(None)
                } else {
                    Value::Trop(Some(s.parse().map_err(|_| invalid())?))
                }
            }
            Semiring::Table(_) => Value::Index(s.parse().map_err(|_| invalid())?),
        };
        if self.contains(&v) {
            Ok(v)
        } else {
            Err(invalid())
        }
    }

    /// Formats a value in the literal syntax accepted by
    /// [`Semiring::parse_value`].
    pub fn display<'a>(&'a self, v: &'a Value) -> ValueDisplay<'a> {
        ValueDisplay(v)
    }
}

/// Literal form of a [`Value`].
pub struct ValueDisplay<'a>(&'a Value);

impl fmt::Display for ValueDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Value::Level(x) | Value::Index(x) => write!(f, "{x}"),
            Value::Nat(x) => write!(f, "{x}"),
            Value::Trop(None) => f.write_str("inf"),
            Value::Trop(Some(x)) => write!(f, "{x}"),
            Value::Set(mask) => {
                f.write_str("{")?;
                let mut first = true;
                for k in 0..64 {
                    if mask >> k & 1 == 1 {
                        if !first {
                            f.write_str(",")?;
                        }
                        write!(f, "{}", k + 1)?;
                        first = false;
                    }
                }
                f.write_str("}")
            }
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        ValueDisplay(self).fmt(f)
    }
}

fn full_mask(m: u32) -> u64 {
    if m >= 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

/// A value tagged with the semiring it lives in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    semiring: Semiring,
    value: Value,
}

impl Element {
    pub fn new(semiring: Semiring, value: Value) -> Result<Self> {
        if !semiring.contains(&value) {
            return Err(Error::InvalidElement {
                semiring: semiring.to_string(),
                literal: format!("{value}"),
            });
        }
        Ok(Element { semiring, value })
    }

    pub fn parse(semiring: Semiring, literal: &str) -> Result<Self> {
        let value = semiring.parse_value(literal)?;
        Ok(Element { semiring, value })
    }

    pub fn zero(semiring: &Semiring) -> Self {
        Element {
            value: semiring.zero(),
            semiring: semiring.clone(),
        }
    }

    pub fn one(semiring: &Semiring) -> Self {
        Element {
            value: semiring.one(),
            semiring: semiring.clone(),
        }
    }

    pub fn semiring(&self) -> &Semiring {
        &self.semiring
    }

    pub fn value(&self) -> &Value {
        &self.value
    }

    pub fn into_value(self) -> Value {
        self.value
    }

    fn check_same(&self, other: &Element) -> Result<()> {
        if self.semiring != other.semiring {
            return Err(Error::SemiringMismatch {
                left: self.semiring.to_string(),
                right: other.semiring.to_string(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        self.check_same(other)?;
        Ok(Element {
            value: self.semiring.add(&self.value, &other.value),
            semiring: self.semiring.clone(),
        })
    }

    pub fn mul(&self, other: &Element) -> Result<Element> {
        self.check_same(other)?;
        Ok(Element {
            value: self.semiring.mul(&self.value, &other.value),
            semiring: self.semiring.clone(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.semiring.is_zero(&self.value)
    }

    /// The inverse, when this element is a unit.
    pub fn inverse(&self) -> Option<Element> {
        self.semiring.inverse(&self.value).map(|value| Element {
            value,
            semiring: self.semiring.clone(),
        })
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

/// Tables of `Z/kZ`; not zerosumfree for `k >= 2`. Useful as a negative
/// input to [`validate_axioms`].
pub fn integers_mod(k: usize) -> Result<FiniteTables> {
    let add = (0..k).map(|a| (0..k).map(|b| (a + b) % k).collect()).collect();
    let mul = (0..k).map(|a| (0..k).map(|b| (a * b) % k).collect()).collect();
    FiniteTables::new(add, mul, 0, 1 % k.max(1))
}
