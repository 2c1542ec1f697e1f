use pyo3::prelude::*; #[pymodule] fn ezk_py(_m: &Bound<PyModule>) -> PyResult<()> { Ok(()) }
