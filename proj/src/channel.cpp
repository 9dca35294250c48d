#include "misoic/channel.hpp"

#include "misoic/errors.hpp"
#include "misoic/rng.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace misoic {

namespace {

constexpr double kSqrtHalf = 0.70710678118654752440;

cplx cn_entry(SplitMix64& rng) {
    auto [x, y] = gauss_pair(rng);
    return cplx(x * kSqrtHalf, y * kSqrtHalf);
}

CVec cn_vector(int n, SplitMix64& rng) {
    CVec v(static_cast<std::size_t>(n));
    for (auto& e : v) e = cn_entry(rng);
    return v;
}

void check_n(int n) {
    if (n < 2) throw RangeError("channel dimension must be at least 2, got " + std::to_string(n));
}

// Unit vector orthogonal to ref, direction drawn isotropically. Redraws on
// the (measure zero) event that the sample is parallel to ref.
CVec random_orth_unit(const CVec& ref, SplitMix64& rng) {
    for (;;) {
        CVec g = cn_vector(static_cast<int>(ref.size()), rng);
        CVec r = proj_orth(g, ref);
        if (vnorm(r) > 1e-6) return unit(r);
    }
}

} // namespace

double angle(const CVec& a, const CVec& b) {
    double na = vnorm(a);
    double nb = vnorm(b);
    if (na <= tol_deg || nb <= tol_deg)
        throw DegenerateDirection("angle() needs two nonzero vectors");
    double c = std::abs(inner(a, b)) / (na * nb);
    c = std::clamp(c, 0.0, 1.0);
    return std::acos(c);
}

Channel gen_iid(int n, std::uint64_t seed) {
    check_n(n);
    SplitMix64 rng(seed);
    Channel ch;
    ch.n = n;
    ch.h11 = cn_vector(n, rng);
    ch.h12 = cn_vector(n, rng);
    ch.h21 = cn_vector(n, rng);
    ch.h22 = cn_vector(n, rng);
    return ch;
}

Channel gen_symmetric(int n, double theta, double sir, std::uint64_t seed) {
    check_n(n);
    if (theta < 0.0 || theta > 1.5707963267948966)
        throw RangeError("theta must lie in [0, pi/2]");
    if (!(sir > 0.0)) throw RangeError("sir must be positive");
    SplitMix64 rng(seed);
    Channel ch;
    ch.n = n;
    ch.h11 = cn_vector(n, rng);
    ch.h22 = cn_vector(n, rng);

    auto make_cross = [&](const CVec& direct) {
        CVec u = random_orth_unit(direct, rng);
        double psi = rng.uniform_angle();
        double mag = vnorm(direct) / std::sqrt(sir);
        cplx ph = std::polar(1.0, psi);
        CVec d = unit(direct);
        CVec out(d.size());
        for (std::size_t i = 0; i < d.size(); ++i)
            out[i] = mag * (std::cos(theta) * d[i] + std::sin(theta) * ph * u[i]);
        return out;
    };
    // Cross channel at receiver j is tied to that receiver's direct channel.
    ch.h21 = make_cross(ch.h11);
    ch.h12 = make_cross(ch.h22);
    return ch;
}

Channel swap_users(const Channel& ch) {
    Channel out;
    out.n = ch.n;
    out.h11 = ch.h22;
    out.h22 = ch.h11;
    out.h12 = ch.h21;
    out.h21 = ch.h12;
    return out;
}

namespace {

void append_vec(std::string& out, const char* name, const CVec& v) {
    char buf[64];
    out += '"';
    out += name;
    out += "\": [";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        std::snprintf(buf, sizeof(buf), "[%.17g, %.17g]", v[i].real(), v[i].imag());
        out += buf;
    }
    out += ']';
}

CVec parse_vec(const nlohmann::json& j, const char* name, int n) {
    if (!j.contains(name)) throw ParseError(std::string("channel json: missing field \"") + name + "\"");
    const auto& arr = j.at(name);
    if (!arr.is_array() || static_cast<int>(arr.size()) != n)
        throw ParseError(std::string("channel json: field \"") + name + "\" must be an array of length " +
                         std::to_string(n));
    CVec v;
    v.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto& e = arr[i];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
            throw ParseError(std::string("channel json: entry ") + std::to_string(i) + " of \"" + name +
                             "\" must be a [re, im] pair");
        v.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return v;
}

} // namespace

std::string channel_to_json(const Channel& ch) {
    // Written by hand so every coefficient keeps 17 significant digits and the
    // file round-trips bit for bit.
    std::string out = "{\n  \"n\": " + std::to_string(ch.n) + ",\n  ";
    append_vec(out, "h11", ch.h11);
    out += ",\n  ";
    append_vec(out, "h12", ch.h12);
    out += ",\n  ";
    append_vec(out, "h21", ch.h21);
    out += ",\n  ";
    append_vec(out, "h22", ch.h22);
    out += "\n}\n";
    return out;
}

Channel channel_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("channel json: ") + e.what());
    }
    if (!j.contains("n") || !j.at("n").is_number_integer())
        throw ParseError("channel json: missing integer field \"n\"");
    int n = j.at("n").get<int>();
    check_n(n);
    Channel ch;
    ch.n = n;
    ch.h11 = parse_vec(j, "h11", n);
    ch.h12 = parse_vec(j, "h12", n);
    ch.h21 = parse_vec(j, "h21", n);
    ch.h22 = parse_vec(j, "h22", n);
    return ch;
}

void save_channel(const Channel& ch, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot open \"" + path + "\" for writing");
    f << channel_to_json(ch);
    if (!f) throw ParseError("write to \"" + path + "\" failed");
}

Channel load_channel(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot open \"" + path + "\" for reading");
    std::stringstream ss;
    ss << f.rdbuf();
    return channel_from_json(ss.str());
}

} // namespace misoic
