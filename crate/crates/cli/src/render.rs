use cubic3_core::{Coeff, CubicForm, Matrix, PointProj, ReducedTriple};
use num_bigint::BigInt;
use serde_json::{json, Value};

pub fn num(x: &impl ToString) -> Value {
    Value::String(x.to_string())
}

pub fn nums<T: ToString>(xs: &[T]) -> Value {
    Value::Array(xs.iter().map(num).collect())
}

pub fn matrix<C: Coeff>(m: &Matrix<C>) -> Value {
    Value::Array((0..m.rows()).map(|i| nums(m.row(i))).collect())
}

pub fn form<C: Coeff>(f: &CubicForm<C>) -> Value {
    Value::String(f.to_string())
}

pub fn point(p: &PointProj) -> Value {
    nums(p.coords())
}

/// `G` is written in the variables after `x0`, as in the reassembled form.
pub fn triple(t: &ReducedTriple) -> Value {
    json!({ "a": num(&t.a), "b": nums(&t.b), "G": form(&t.g.shifted(1)) })
}

pub fn matrix_text<C: Coeff>(m: &Matrix<C>) -> String {
    let rows: Vec<String> =
        (0..m.rows()).map(|i| m.row(i).iter().map(ToString::to_string).collect::<Vec<_>>().join(",")).collect();
    rows.join(";")
}

pub fn ints_text(v: &[BigInt]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}
