use pyo3::prelude::*;
use pyo3::types::PyDict;

fn with_module<F: FnOnce(Python<'_>, &Bound<'_, PyDict>)>(f: F) {
    static INIT: std::sync::Once = std::sync::Once::new();
    INIT.call_once(|| {
        use veronese::veronese as module;
        pyo3::append_to_inittab!(module);
        Python::initialize();
    });
    Python::attach(|py| {
        let globals = PyDict::new(py);
        py.run(c"import veronese, json", Some(&globals), None)
            .unwrap();
        f(py, &globals);
    });
}

fn eval<'py>(
    py: Python<'py>,
    globals: &Bound<'py, PyDict>,
    code: &std::ffi::CStr,
) -> Bound<'py, PyAny> {
    py.eval(code, Some(globals), None).unwrap()
}

#[test]
fn worked_example_through_python() {
    with_module(|py, g| {
        py.run(c"v = veronese.Veronese(5, [3, 2, 1])", Some(g), None)
            .unwrap();
        let primes: Vec<(Vec<usize>, Vec<u32>)> =
            eval(py, g, c"v.associated_primes()").extract().unwrap();
        assert_eq!(primes.len(), 5);
        assert_eq!(primes[0], (vec![1], vec![1, 2, 1]));
        let flags: (bool, bool, String) = eval(
            py,
            g,
            c"(v.is_equidimensional(), v.is_unmixed(), v.classify())",
        )
        .extract()
        .unwrap();
        assert_eq!(flags, (true, false, "NotCohenMacaulay".to_string()));
        let agreed: bool = eval(
            py,
            g,
            c"json.loads(v.analyze(oracle=True))['oracle']['agreed']",
        )
        .extract()
        .unwrap();
        assert!(agreed);
    });
}

#[test]
fn radicals_and_borel_generators() {
    with_module(|py, g| {
        let radical: Vec<Vec<usize>> =
            eval(py, g, c"veronese.radical_generators(7, [4, 3, 2, 1, 1])")
                .extract()
                .unwrap();
        assert_eq!(
            radical,
            vec![vec![1, 2], vec![1, 3, 4], vec![1, 3, 5], vec![2, 3, 4, 5]]
        );
        let borel: Vec<Vec<usize>> = eval(
            py,
            g,
            c"veronese.borel_generators(5, veronese.radical_generators(7, [4, 3, 2, 1, 1]))",
        )
        .extract()
        .unwrap();
        assert_eq!(borel, vec![vec![1, 2], vec![1, 3, 5], vec![2, 3, 4, 5]]);
        let mb: Option<(usize, usize)> =
            eval(py, g, c"veronese.Veronese.parse('7; 4,3,2,1,1').mb()")
                .extract()
                .unwrap();
        assert_eq!(mb, Some((5, 4)));
    });
}

#[test]
fn base_sets_and_oracle_functions() {
    with_module(|py, g| {
        py.run(
            c"b = veronese.BaseSet([[2, 1, 1], [1, 2, 1], [1, 1, 2]])",
            Some(g),
            None,
        )
        .unwrap();
        let strong: bool = eval(py, g, c"b.check_strong_exchange()").extract().unwrap();
        assert!(strong);
        let offset: Vec<u32> = eval(py, g, c"b.translation_normalize()[0]")
            .extract()
            .unwrap();
        assert_eq!(offset, vec![1, 1, 1]);
        let covers: Vec<Vec<usize>> = eval(py, g, c"veronese.minimal_vertex_covers(2, [[1, 1]])")
            .extract()
            .unwrap();
        assert_eq!(covers, vec![vec![1], vec![2]]);
    });
}

#[test]
fn domain_errors_raise_veronese_error() {
    with_module(|py, g| {
        let e = py
            .eval(c"veronese.Veronese.parse('3;1,1')", Some(g), None)
            .unwrap_err();
        assert!(e.is_instance_of::<pyo3::exceptions::PyValueError>(py));
        assert!(e.to_string().contains("zero ideal"), "{e}");
        let name: String = eval(py, g, c"veronese.VeroneseError.__name__")
            .extract()
            .unwrap();
        assert_eq!(name, "VeroneseError");
    });
}
