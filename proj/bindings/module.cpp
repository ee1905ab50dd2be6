#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "wigkit/spherical.hpp"
#include "wigkit/sweep.hpp"
#include "wigkit/wigner.hpp"

namespace py = pybind11;
using namespace wigkit;

namespace {

std::vector<std::vector<double>> matrix_rows(const LorentzMatrix& M) {
    std::vector<std::vector<double>> rows(4, std::vector<double>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) rows[i][j] = M(i, j);
    return rows;
}

std::string sweep_csv(const SweepSpec& spec) {
    std::ostringstream os;
    write_csv(os, spec, run_sweep(spec));
    return os.str();
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Wigner little-group rotations of lightlike momenta";

    py::register_exception<DegenerateDirections>(m, "DegenerateDirections", PyExc_ValueError);
    py::register_exception<DegenerateTheta>(m, "DegenerateTheta", PyExc_ValueError);
    py::register_exception<NonPositiveRatio>(m, "NonPositiveRatio", PyExc_ValueError);
    py::register_exception<NotLightlike>(m, "NotLightlike", PyExc_ValueError);
    py::register_exception<AntipodalDirection>(m, "AntipodalDirection", PyExc_ValueError);
    py::register_exception<DegenerateTriangle>(m, "DegenerateTriangle", PyExc_ValueError);
    py::register_exception<InvalidSides>(m, "InvalidSides", PyExc_ValueError);

    m.attr("LIGHT_SPEED_KM_S") = kLightSpeedKmPerS;

    py::class_<UnitVec3>(m, "UnitVec3")
        .def(py::init<double, double, double>())
        .def_property_readonly("x", &UnitVec3::x)
        .def_property_readonly("y", &UnitVec3::y)
        .def_property_readonly("z", &UnitVec3::z)
        .def("dot", [](const UnitVec3& a, const UnitVec3& b) { return a.dot(b); })
        .def("polar_angle", &UnitVec3::polar_angle)
        .def("azimuth_angle", &UnitVec3::azimuth_angle)
        .def("__repr__", [](const UnitVec3& v) {
            std::ostringstream os;
            os << "UnitVec3(" << v.x() << ", " << v.y() << ", " << v.z() << ")";
            return os.str();
        });

    py::class_<AxisAngleRotation>(m, "AxisAngleRotation")
        .def(py::init<const UnitVec3&, double>())
        .def_property_readonly("axis", &AxisAngleRotation::axis)
        .def_property_readonly("angle", &AxisAngleRotation::angle)
        .def("inverse", &AxisAngleRotation::inverse)
        .def_static("identity", &AxisAngleRotation::identity);

    py::class_<UnitQuaternion>(m, "UnitQuaternion")
        .def_property_readonly("w", &UnitQuaternion::w)
        .def_property_readonly("v", [](const UnitQuaternion& q) {
            return py::make_tuple(q.v().x, q.v().y, q.v().z);
        })
        .def("to_axis_angle", &UnitQuaternion::to_axis_angle);

    py::class_<FourMomentum>(m, "FourMomentum")
        .def(py::init<double, double, double, double>())
        .def_static("from_direction", &FourMomentum::from_direction)
        .def_static("standard", &FourMomentum::standard)
        .def_property_readonly("e", &FourMomentum::e)
        .def_property_readonly("px", &FourMomentum::px)
        .def_property_readonly("py", &FourMomentum::py)
        .def_property_readonly("pz", &FourMomentum::pz)
        .def("direction", &FourMomentum::direction);

    py::class_<Boost>(m, "Boost")
        .def(py::init<const UnitVec3&, double>())
        .def_property_readonly("direction", &Boost::direction)
        .def_property_readonly("beta", &Boost::beta)
        .def_property_readonly("gamma", &Boost::gamma);

    py::class_<LorentzMatrix>(m, "LorentzMatrix")
        .def_static("identity", &LorentzMatrix::identity)
        .def("entry", [](const LorentzMatrix& M, int i, int j) { return M(i, j); })
        .def("rows", &matrix_rows)
        .def("inverse", &LorentzMatrix::inverse)
        .def("metric_residual", &LorentzMatrix::metric_residual)
        .def("__matmul__", [](const LorentzMatrix& a, const LorentzMatrix& b) { return a * b; });

    py::class_<StandardTransformChoice>(m, "StandardTransformChoice")
        .def(py::init<double, double>(), py::arg("theta"), py::arg("omega0") = 1.0)
        .def_property_readonly("theta", &StandardTransformChoice::theta)
        .def_property_readonly("omega0", &StandardTransformChoice::omega0);

    py::class_<LittleGroupParts>(m, "LittleGroupParts")
        .def_readonly("angle", &LittleGroupParts::angle)
        .def_readonly("alpha", &LittleGroupParts::alpha)
        .def_readonly("beta", &LittleGroupParts::beta)
        .def_readonly("reconstruction_residual", &LittleGroupParts::reconstruction_residual);

    py::class_<WignerResult>(m, "WignerResult")
        .def_readonly("matrix", &WignerResult::matrix)
        .def_readonly("axis", &WignerResult::axis)
        .def_readonly("angle_signed", &WignerResult::angle_signed)
        .def_readonly("rotations", &WignerResult::rotations)
        .def_readonly("oracle_angle", &WignerResult::oracle_angle)
        .def_readonly("transformed_momentum", &WignerResult::transformed_momentum)
        .def("residual", &WignerResult::residual);

    py::class_<SphericalTriangle>(m, "SphericalTriangle")
        .def(py::init<const UnitVec3&, const UnitVec3&, const UnitVec3&>())
        .def_property_readonly("v1", &SphericalTriangle::v1)
        .def_property_readonly("v2", &SphericalTriangle::v2)
        .def_property_readonly("v3", &SphericalTriangle::v3)
        .def("orientation", &SphericalTriangle::orientation);

    // core operations
    m.def("rodrigues_rotate", &rodrigues_rotate);
    m.def("rotation_family_basis", [](const UnitVec3& k, const UnitVec3& kp) {
        const RotationFamilyBasis b = rotation_family_basis(k, kp);
        return py::make_tuple(b.u1, b.u2, b.u3);
    });
    m.def("axis_from_theta", &axis_from_theta);
    m.def("quat_from_axis_angle", &quat_from_axis_angle);
    m.def("quat_product", &quat_product);
    m.def("wigner_angle_closed_form", &wigner_angle_closed_form);

    m.def("boost_matrix", &boost_matrix);
    m.def("standard_massless_boost", &standard_massless_boost);
    m.def("embed_rotation", &embed_rotation);
    m.def("apply", &apply);
    m.def("aberrated_direction", &aberrated_direction);
    m.def("polar_decompose", [](const LorentzMatrix& M) {
        const PolarDecomposition pd = polar_decompose(M);
        return py::make_tuple(pd.boost_part, pd.rotation_part);
    });
    m.def("thomas_axis", &thomas_axis);
    m.def("thomas_angle", &thomas_angle);

    m.def("standard_transformation", &standard_transformation);
    m.def("wigner_matrix_oracle", &wigner_matrix_oracle);
    m.def("wigner_angle_analytic", &wigner_angle_analytic);
    m.def("little_group_parts", &little_group_parts);
    m.def("little_group_angle", &little_group_angle);
    m.def("phi3_from_phi1", &phi3_from_phi1);

    m.def("polar_triangle", &polar_triangle);
    m.def("excess_from_axes", &excess_from_axes);
    m.def("excess_from_angle_sum", &excess_from_angle_sum);
    m.def("lhuilier_excess", &lhuilier_excess);

    m.def("ratio_from_beta", &ratio_from_beta);
    m.def("beta_from_ratio", &beta_from_ratio);
    m.def("parse_velocity", &parse_velocity);

    // evaluation and sweeps
    py::class_<EvalParams>(m, "EvalParams")
        .def(py::init<>())
        .def_readwrite("p_hat", &EvalParams::p_hat)
        .def_readwrite("b_hat", &EvalParams::b_hat)
        .def_readwrite("v_b", &EvalParams::v_b)
        .def_readwrite("theta", &EvalParams::theta)
        .def_readwrite("ratio", &EvalParams::ratio)
        .def_readwrite("omega0", &EvalParams::omega0)
        .def("effective_v_z", &EvalParams::effective_v_z);

    py::class_<EvalResult>(m, "EvalResult")
        .def_readonly("phi_w", &EvalResult::phi_w)
        .def_readonly("phi_w_oracle", &EvalResult::phi_w_oracle)
        .def_readonly("residual", &EvalResult::residual)
        .def_readonly("phi_2", &EvalResult::phi_2)
        .def_readonly("n1", &EvalResult::n1)
        .def_readonly("n2", &EvalResult::n2)
        .def_readonly("n3", &EvalResult::n3)
        .def_readonly("excess", &EvalResult::excess)
        .def_readonly("aberrated", &EvalResult::aberrated);

    m.def("evaluate", &evaluate);

    py::enum_<SweepVariable>(m, "SweepVariable")
        .value("ANGLE_ZP", SweepVariable::AngleZp)
        .value("V_B", SweepVariable::Vb)
        .value("THETA", SweepVariable::Theta);

    py::class_<SweepSpec>(m, "SweepSpec")
        .def(py::init<>())
        .def_readwrite("variable", &SweepSpec::variable)
        .def_readwrite("start", &SweepSpec::start)
        .def_readwrite("stop", &SweepSpec::stop)
        .def_readwrite("count", &SweepSpec::count)
        .def_readwrite("fixed", &SweepSpec::fixed);

    py::class_<SweepRow>(m, "SweepRow")
        .def_readonly("value", &SweepRow::value)
        .def_readonly("phi_w", &SweepRow::phi_w)
        .def_readonly("phi_w_oracle", &SweepRow::phi_w_oracle)
        .def_readonly("phi_2", &SweepRow::phi_2)
        .def_readonly("excess", &SweepRow::excess)
        .def_readonly("residual", &SweepRow::residual)
        .def_readonly("ok", &SweepRow::ok)
        .def_readonly("status", &SweepRow::status);

    m.def("run_sweep", &run_sweep);
    m.def("sweep_csv", &sweep_csv);

    py::class_<SuiteResult>(m, "SuiteResult")
        .def_readonly("name", &SuiteResult::name)
        .def_readonly("passed", &SuiteResult::pass)
        .def_readonly("max_residual", &SuiteResult::max_residual)
        .def_readonly("tolerance", &SuiteResult::tolerance)
        .def_readonly("worst_config", &SuiteResult::worst_config);

    m.def("run_verify", &run_verify, py::arg("seed"), py::arg("trials"));
}
