"""Fixed CLI command list shared by the golden-file tests."""

# (golden name, argv, expected exit status)
CASES = [
    ("present_point_even_2", ["present", "--kind", "quadric_point_even", "--n", "2"], 0),
    ("present_integral_even_3", ["present", "--kind", "quadric_integral_even", "--n", "3"], 0),
    ("present_halves_2_json", ["present", "--kind", "quadric_halves", "--n", "2", "--json"], 0),
    ("present_flag_bn_2", ["present", "--kind", "flag_bn", "--n", "2"], 0),
    ("normalize_h2", ["normalize", "--kind", "quadric_point_even", "--n", "2", "--expr", "h^2"], 0),
    ("normalize_hh", ["normalize", "--kind", "quadric_integral_even", "--n", "2", "--expr", "h*h"], 0),
    ("normalize_gamma_json", ["normalize", "--kind", "quadric_integral_even", "--n", "2",
                              "--expr", "gamma^2", "--json"], 0),
    ("normalize_xx_point", ["normalize", "--kind", "quadric_halves", "--n", "2", "--point",
                            "--expr", "x*x"], 0),
    ("mul_tower", ["mul", "--kind", "flag_tower", "--n", "2", "--expr", "h1", "--expr", "h2",
                   "--expr", "h1*h2"], 0),
    ("push_halves", ["push", "--kind", "quadric_halves", "--n", "3", "--expr", "h^4"], 0),
    ("degree_point", ["degree", "--kind", "quadric_point_odd", "--n", "3", "--expr", "h^5"], 0),
    ("verify_example_json", ["verify", "--suite", "example", "--json"], 0),
    ("verify_euler_json", ["verify", "--suite", "euler", "--n", "2", "--json"], 0),
    ("verify_fulton_json", ["verify", "--suite", "fulton", "--n", "2", "--json"], 0),
    ("verify_oracle_json", ["verify", "--suite", "oracle", "--n", "2", "--json"], 0),
    ("verify_odd_identity", ["verify", "--suite", "odd-identity", "--n", "2"], 0),
]

# argv that must fail with a usage or parse error (exit 2, nothing on stdout)
USAGE_ERRORS = [
    ["normalize", "--kind", "quadric_integral_even", "--n", "2", "--expr", "gamma*z"],
    ["normalize", "--kind", "quadric_integral_even", "--n", "2", "--expr", "h^(-1)"],
    ["normalize", "--kind", "quadric_integral_even", "--n", "2", "--expr", "1/2^1*h"],
    ["degree", "--kind", "quadric_point_even", "--n", "2", "--expr", "h"],
    ["degree", "--kind", "quadric_halves", "--n", "2", "--expr", "h^2"],
    ["push", "--kind", "quadric_integral_odd", "--n", "2", "--expr", "h"],
    ["present", "--kind", "flag_dn", "--n", "0"],
    ["present", "--kind", "nonsense", "--n", "2"],
    ["verify", "--suite", "euler", "--n", "9"],
    ["frobnicate"],
    [],
]
