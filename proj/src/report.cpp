#include "toriq/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace toriq {

namespace {

using ordered_json = nlohmann::ordered_json;

const std::int64_t kI64Max = std::numeric_limits<std::int64_t>::max();
const std::int64_t kI64Min = std::numeric_limits<std::int64_t>::min();

ordered_json json_int(const Int& x) {
    if (x >= Int(kI64Min) && x <= Int(kI64Max)) return x.convert_to<std::int64_t>();
    return x.str();  // beyond 64 bits: decimal string, never a float
}

ordered_json json_vec(const IntVector& v) {
    ordered_json a = ordered_json::array();
    for (const Int& x : v) a.push_back(json_int(x));
    return a;
}

ordered_json json_matrix(const IntMatrix& A) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < A.rows(); ++i) rows.push_back(json_vec(A.row(i)));
    return rows;
}

ordered_json json_index_set(const std::vector<int>& s) {
    ordered_json a = ordered_json::array();
    for (int i : s) a.push_back(i + 1);  // reports are 1-based
    return a;
}

ordered_json json_facets(const HalfspacePolytope& P) {
    ordered_json facets = ordered_json::array();
    for (const Facet& f : P.facets()) {
        ordered_json o;
        o["normal"] = json_vec(f.normal);
        o["offset"] = json_int(f.offset);
        facets.push_back(std::move(o));
    }
    return facets;
}

ordered_json json_polytope(const HalfspacePolytope& P) {
    ordered_json o;
    o["ambient_dim"] = P.ambient_dim();
    o["num_facets"] = P.num_facets();
    o["facets"] = json_facets(P);
    return o;
}

ordered_json json_certificate(const DelzantCertificate& cert) {
    ordered_json verts = ordered_json::array();
    for (std::size_t i = 0; i < cert.vertices.size(); ++i) {
        ordered_json v;
        v["point"] = json_vec(cert.vertex_points[i]);
        v["active_facets"] = json_index_set(cert.vertices[i].active_facets);
        v["determinant"] = json_int(cert.vertex_determinants[i]);
        verts.push_back(std::move(v));
    }
    return verts;
}

ordered_json json_construction(const ConstructionData& C) {
    ordered_json o;
    o["pi"] = json_matrix(C.pi);
    o["V"] = json_matrix(C.V);
    o["kernel_basis"] = json_matrix(C.kernel_basis);
    o["L"] = json_matrix(C.L);
    o["lambda"] = json_vec(C.lambda);
    o["nu"] = json_vec(C.nu);
    return o;
}

// members ordered by size, then lexicographically
std::vector<std::vector<int>> family_display_order(const FacetFamily& F) {
    std::vector<std::vector<int>> sets(F.members().begin(), F.members().end());
    std::stable_sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return sets;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string index_set_text(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i] + 1);
    }
    return out + "}";
}

std::string rat_point_text(const RationalVector& p) { return to_string(p); }

void print_facets(std::ostringstream& os, const HalfspacePolytope& P) {
    os << "polytope: n = " << P.ambient_dim() << ", N = " << P.num_facets() << " facets\n";
    for (std::size_t j = 0; j < P.num_facets(); ++j) {
        const Facet& f = P.facet(j);
        os << "  facet " << (j + 1) << ": <x, " << to_string(f.normal) << "> >= " << f.offset
           << "\n";
    }
}

// column-aligned integer matrix
void print_matrix(std::ostringstream& os, const std::string& name, const IntMatrix& A) {
    std::vector<std::size_t> width(A.cols(), 0);
    for (std::size_t j = 0; j < A.cols(); ++j)
        for (std::size_t i = 0; i < A.rows(); ++i)
            width[j] = std::max(width[j], A(i, j).str().size());
    os << name << " =";
    if (A.rows() == 0 || A.cols() == 0) {
        os << " [] (" << A.rows() << "x" << A.cols() << ")\n";
        return;
    }
    os << "\n";
    for (std::size_t i = 0; i < A.rows(); ++i) {
        os << "  [";
        for (std::size_t j = 0; j < A.cols(); ++j) {
            std::string s = A(i, j).str();
            os << " " << std::string(width[j] - s.size(), ' ') << s;
        }
        os << " ]\n";
    }
}

void print_construction(std::ostringstream& os, const ConstructionData& C) {
    print_matrix(os, "pi", C.pi);
    print_matrix(os, "V = pi^T", C.V);
    print_matrix(os, "kernel basis", C.kernel_basis);
    print_matrix(os, "L", C.L);
    os << "lambda = " << to_string(C.lambda) << "\n";
    os << "nu = L(-lambda) = " << to_string(C.nu) << "\n";
}

}  // namespace

std::string render_validate_text(const HalfspacePolytope& P, const DelzantCertificate& cert) {
    std::ostringstream os;
    print_facets(os, P);
    os << "Delzant: yes (" << cert.vertices.size() << " vertices, all simple, all unimodular)\n";
    for (std::size_t i = 0; i < cert.vertices.size(); ++i)
        os << "  vertex " << to_string(cert.vertex_points[i]) << "  active "
           << index_set_text(cert.vertices[i].active_facets) << "  det "
           << cert.vertex_determinants[i] << "\n";
    return os.str();
}

std::string render_validate_json(const HalfspacePolytope& P, const DelzantCertificate& cert) {
    ordered_json o;
    o["polytope"] = json_polytope(P);
    o["delzant"] = true;
    o["vertices"] = json_certificate(cert);
    return dump(o);
}

std::string render_vertices_text(const HalfspacePolytope& P, const std::vector<Vertex>& verts) {
    std::ostringstream os;
    print_facets(os, P);
    os << "vertices (" << verts.size() << "):\n";
    for (const Vertex& v : verts)
        os << "  " << rat_point_text(v.point) << "  active " << index_set_text(v.active_facets)
           << "\n";
    return os.str();
}

std::string render_vertices_json(const HalfspacePolytope& P, const std::vector<Vertex>& verts) {
    ordered_json o;
    o["polytope"] = json_polytope(P);
    ordered_json arr = ordered_json::array();
    for (const Vertex& v : verts) {
        ordered_json jv;
        ordered_json point = ordered_json::array();
        for (const Rat& q : v.point)
            point.push_back(denominator(q) == 1 ? json_int(numerator(q))
                                                : ordered_json(q.str()));
        jv["point"] = std::move(point);
        jv["active_facets"] = json_index_set(v.active_facets);
        arr.push_back(std::move(jv));
    }
    o["vertices"] = std::move(arr);
    return dump(o);
}

std::string render_lattice_text(const std::vector<IntVector>& points) {
    std::ostringstream os;
    os << "lattice points (" << points.size() << "):\n";
    for (const IntVector& p : points) os << "  " << to_string(p) << "\n";
    return os.str();
}

std::string render_lattice_json(const std::vector<IntVector>& points) {
    ordered_json o;
    o["lattice_count"] = points.size();
    ordered_json arr = ordered_json::array();
    for (const IntVector& p : points) arr.push_back(json_vec(p));
    o["lattice_points"] = std::move(arr);
    return dump(o);
}

std::string render_family_text(const FacetFamily& F, std::size_t codim,
                               const std::vector<std::vector<int>>& witnesses) {
    std::ostringstream os;
    os << "facet family F (" << F.members().size() << " sets):\n  ";
    bool first = true;
    for (const auto& s : family_display_order(F)) {
        if (!first) os << ", ";
        os << index_set_text(s);
        first = false;
    }
    os << "\n";
    os << "complement codimension: " << codim << " (missing:";
    for (const auto& s : witnesses) os << " " << index_set_text(s);
    os << ")\n";
    return os.str();
}

std::string render_family_json(const FacetFamily& F, std::size_t codim,
                               const std::vector<std::vector<int>>& witnesses) {
    ordered_json o;
    o["num_facets"] = F.num_facets();
    ordered_json fam = ordered_json::array();
    for (const auto& s : family_display_order(F)) fam.push_back(json_index_set(s));
    o["facet_family"] = std::move(fam);
    o["complement_codimension"] = codim;
    ordered_json wit = ordered_json::array();
    for (const auto& s : witnesses) wit.push_back(json_index_set(s));
    o["codimension_witnesses"] = std::move(wit);
    return dump(o);
}

std::string render_construct_text(const HalfspacePolytope& P, const ConstructionData& C) {
    std::ostringstream os;
    print_facets(os, P);
    print_construction(os, C);
    return os.str();
}

std::string render_construct_json(const HalfspacePolytope& P, const ConstructionData& C) {
    ordered_json o;
    o["polytope"] = json_polytope(P);
    o["construction"] = json_construction(C);
    return dump(o);
}

std::string render_quantize_text(const QuantizationReport& r) {
    std::ostringstream os;
    print_facets(os, r.polytope);
    os << "vertices (" << r.certificate.vertices.size() << "):\n";
    for (std::size_t i = 0; i < r.certificate.vertices.size(); ++i)
        os << "  " << to_string(r.certificate.vertex_points[i]) << "  active "
           << index_set_text(r.certificate.vertices[i].active_facets) << "  det "
           << r.certificate.vertex_determinants[i] << "\n";
    print_construction(os, r.construction);
    os << render_family_text(r.family, r.complement_codim, r.codim_witnesses);
    os << "lattice points of Delta (" << r.lattice_count() << "):\n  ";
    for (std::size_t i = 0; i < r.lattice.size(); ++i)
        os << (i ? ", " : "") << to_string(r.lattice[i]);
    os << "\n";
    os << "section basis (" << r.dimension() << "), weight nu = " << to_string(r.basis.weight)
       << ":\n  ";
    for (std::size_t i = 0; i < r.basis.monomials.size(); ++i)
        os << (i ? ", " : "") << render(r.basis.monomials[i]);
    os << "\n";
    os << "bijection Delta cap Z^n -> fiber: "
       << (r.bijection.complete ? "complete" : "INCOMPLETE") << " (" << r.bijection.pairs.size()
       << " pairs)\n";
    if (!r.bijection.complete) os << "  failure: " << r.bijection.failure << "\n";
    os << "dimension: " << r.dimension() << "\n";
    os << "theorem verified: " << (r.theorem_verified ? "yes" : "NO") << "\n";
    return os.str();
}

std::string render_quantize_json(const QuantizationReport& r) {
    ordered_json o;
    o["polytope"] = json_polytope(r.polytope);
    o["vertices"] = json_certificate(r.certificate);
    o["construction"] = json_construction(r.construction);
    ordered_json fam = ordered_json::array();
    for (const auto& s : family_display_order(r.family)) fam.push_back(json_index_set(s));
    o["facet_family"] = std::move(fam);
    o["complement_codimension"] = r.complement_codim;
    ordered_json wit = ordered_json::array();
    for (const auto& s : r.codim_witnesses) wit.push_back(json_index_set(s));
    o["codimension_witnesses"] = std::move(wit);
    ordered_json lat = ordered_json::array();
    for (const IntVector& p : r.lattice) lat.push_back(json_vec(p));
    o["lattice_points"] = std::move(lat);
    o["lattice_count"] = r.lattice_count();
    ordered_json basis;
    basis["weight"] = json_vec(r.basis.weight);
    ordered_json mons = ordered_json::array();
    for (const Monomial& m : r.basis.monomials) {
        ordered_json jm;
        jm["exponents"] = json_vec(m.exponents);
        jm["monomial"] = render(m);
        mons.push_back(std::move(jm));
    }
    basis["monomials"] = std::move(mons);
    o["section_basis"] = std::move(basis);
    ordered_json bij;
    bij["complete"] = r.bijection.complete;
    if (!r.bijection.complete) bij["failure"] = r.bijection.failure;
    ordered_json pairs = ordered_json::array();
    for (const auto& [x, y] : r.bijection.pairs) {
        ordered_json p;
        p["x"] = json_vec(x);
        p["y"] = json_vec(y);
        pairs.push_back(std::move(p));
    }
    bij["pairs"] = std::move(pairs);
    o["bijection"] = std::move(bij);
    o["dimension"] = r.dimension();
    o["theorem_verified"] = r.theorem_verified;
    return dump(o);
}

std::string render_sweep_text(const std::vector<std::pair<long long, std::size_t>>& rows) {
    std::ostringstream os;
    os << "dilate sweep:\n";
    os << "  m  dimension\n";
    for (const auto& [m, d] : rows) os << "  " << m << "  " << d << "\n";
    return os.str();
}

std::string render_sweep_json(const std::vector<std::pair<long long, std::size_t>>& rows) {
    ordered_json o;
    ordered_json arr = ordered_json::array();
    for (const auto& [m, d] : rows) {
        ordered_json row;
        row["m"] = m;
        row["dimension"] = d;
        arr.push_back(std::move(row));
    }
    o["sweep"] = std::move(arr);
    return dump(o);
}

}  // namespace toriq
