// Command-line front end: every library computation behind a verb with
// stable JSON on standard output.
//
// Exit codes: 0 success, 2 rejected input, 1 broken internal invariant.
// Errors print a JSON object {"error": kind, "detail": message}.

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "formclass/classgroup.hpp"
#include "formclass/clifford.hpp"
#include "formclass/errors.hpp"
#include "formclass/forms.hpp"
#include "formclass/hecke.hpp"
#include "formclass/json_io.hpp"
#include "formclass/modules.hpp"
#include "formclass/rings.hpp"
#include "formclass/universal.hpp"

namespace {

using formclass::Int;
using formclass::Json;

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

int emit_error(const std::string& kind, const std::string& detail, int code) {
    Json j = Json::object();
    j["error"] = kind;
    j["detail"] = detail;
    emit(j);
    return code;
}

formclass::BinaryForm parse_form(const std::string& a, const std::string& b,
                                 const std::string& c) {
    return formclass::BinaryForm{formclass::parse_int(a),
                                 formclass::parse_int(b),
                                 formclass::parse_int(c)};
}

Json run_reduce(const std::vector<std::string>& args) {
    formclass::ReduceResult r =
        formclass::reduce(parse_form(args[0], args[1], args[2]));
    Json j = Json::object();
    j["form"] = formclass::form_to_array(r.form);
    j["map"] = formclass::to_json(r.map);
    return j;
}

Json run_equiv(const std::vector<std::string>& args, bool wide) {
    formclass::BinaryForm f = parse_form(args[0], args[1], args[2]);
    formclass::BinaryForm g = parse_form(args[3], args[4], args[5]);
    formclass::Variant v =
        wide ? formclass::Variant::wide : formclass::Variant::narrow;
    Json j = Json::object();
    j["equivalent"] = formclass::same_class(v, f, g);
    return j;
}

Json run_compose(const std::vector<std::string>& args, bool oracle) {
    formclass::BinaryForm f = parse_form(args[0], args[1], args[2]);
    formclass::BinaryForm g = parse_form(args[3], args[4], args[5]);
    formclass::BinaryForm h =
        oracle ? formclass::dirichlet_compose(f, g) : formclass::compose(f, g);
    Json j = Json::object();
    j["form"] = formclass::form_to_array(h);
    return j;
}

Json run_classgroup(const std::string& arg, bool narrow) {
    formclass::Variant v =
        narrow ? formclass::Variant::narrow : formclass::Variant::wide;
    return formclass::to_json(
        formclass::class_group(formclass::parse_int(arg), v));
}

Json run_clifford(const std::vector<std::string>& args) {
    formclass::CliffordPair pair =
        formclass::clifford(parse_form(args[0], args[1], args[2]));
    Json j = Json::object();
    j["ring"] = formclass::to_json(pair.ring);
    j["module"] = formclass::to_json(pair.module);
    return j;
}

Json run_norm(const std::vector<std::string>& args) {
    formclass::QuadraticRing ring{formclass::parse_int(args[0]),
                                  formclass::parse_int(args[1])};
    formclass::GoodFrameModule frame{ring, formclass::parse_int(args[2]),
                                     formclass::parse_int(args[3]),
                                     formclass::parse_int(args[4]), 0};
    formclass::validate_frame(frame);
    return formclass::to_json(formclass::norm_form(frame));
}

Json run_hecke(const std::string& disc_arg, const std::string& pmax_arg) {
    Int D = formclass::parse_int(disc_arg);
    Int pmax = formclass::parse_int(pmax_arg);
    formclass::check_input(pmax >= 2, "prime bound must be at least 2");

    formclass::OMFSpace space = formclass::omf_space(D);
    std::vector<formclass::Character> chis = formclass::eigenforms(space);
    std::size_t modulus = chis.empty() ? 1 : chis[0].modulus;

    Json j = Json::object();
    j["disc"] = formclass::int_to_json(D);
    j["h"] = formclass::dimension(space);
    j["modulus"] = modulus;
    Json characters = Json::array();
    for (const formclass::Character& chi : chis) characters.push_back(chi.values);
    j["characters"] = characters;

    Json primes = Json::array();
    for (Int p = 2; p <= pmax; ++p) {
        if (!formclass::is_prime(p)) continue;
        if (D % p == 0) continue;  // bad prime: no operator defined
        formclass::PrimeSplitting split = formclass::split_prime_class(space, p);
        if (!split.is_split) continue;
        formclass::HeckeOperator T = formclass::hecke_operator(
            space, p, formclass::HeckeBranch::prime_above);
        Json entry = Json::object();
        entry["p"] = formclass::int_to_json(p);
        entry["ideal_class"] = split.ideal_class;
        entry["form"] = formclass::form_to_array(split.prime_form);
        entry["perm"] = T.perm;
        Json eigenvalues = Json::array();
        for (const formclass::Character& chi : chis)
            eigenvalues.push_back(
                Json::array({formclass::eigenvalue(chi, T), modulus}));
        entry["eigenvalues"] = eigenvalues;
        primes.push_back(entry);
    }
    j["primes"] = primes;
    return j;
}

Json run_verify_universal(bool& all_verified) {
    std::vector<formclass::ProofReport> reports = formclass::verify_all();
    all_verified = true;
    Json list = Json::array();
    for (const formclass::ProofReport& r : reports) {
        all_verified = all_verified && r.verified;
        Json entry = Json::object();
        entry["identity"] = r.identity;
        entry["differences"] = r.differences;
        entry["verified"] = r.verified;
        list.push_back(entry);
    }
    Json j = Json::object();
    j["verified"] = all_verified;
    j["reports"] = list;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for binary quadratic forms: reduction, "
                 "composition, class groups, Hecke operators"};
    app.require_subcommand(1);

    std::vector<std::string> reduce_args(3);
    auto* reduce_cmd = app.add_subcommand("reduce", "reduce a form a b c");
    reduce_cmd->add_option("a", reduce_args[0])->required();
    reduce_cmd->add_option("b", reduce_args[1])->required();
    reduce_cmd->add_option("c", reduce_args[2])->required();

    std::vector<std::string> equiv_args(6);
    bool equiv_narrow = false, equiv_wide = false;
    auto* equiv_cmd = app.add_subcommand(
        "equiv", "decide whether two forms lie in the same class");
    for (int i = 0; i < 6; ++i)
        equiv_cmd->add_option(std::string(1, char('a' + i)), equiv_args[i])
            ->required();
    auto* narrow_flag = equiv_cmd->add_flag(
        "--narrow", equiv_narrow, "proper equivalence only (the default)");
    equiv_cmd->add_flag("--wide", equiv_wide, "also glue the (-1)-scaling")
        ->excludes(narrow_flag);

    std::vector<std::string> compose_args(6);
    bool compose_oracle = false;
    auto* compose_cmd =
        app.add_subcommand("compose", "compose two forms of one discriminant");
    for (int i = 0; i < 6; ++i)
        compose_cmd->add_option(std::string(1, char('a' + i)), compose_args[i])
            ->required();
    compose_cmd->add_flag("--oracle", compose_oracle,
                          "classical united-forms composition");

    std::string classgroup_arg;
    bool classgroup_narrow = false;
    auto* classgroup_cmd =
        app.add_subcommand("classgroup", "full class group of discriminant D");
    classgroup_cmd->add_option("D", classgroup_arg)->required();
    classgroup_cmd->add_flag("--narrow", classgroup_narrow,
                             "narrow (strict) classes");

    std::vector<std::string> clifford_args(3);
    auto* clifford_cmd = app.add_subcommand(
        "clifford", "even Clifford ring and module of a form");
    clifford_cmd->add_option("a", clifford_args[0])->required();
    clifford_cmd->add_option("b", clifford_args[1])->required();
    clifford_cmd->add_option("c", clifford_args[2])->required();

    std::vector<std::string> norm_args(5);
    auto* norm_cmd = app.add_subcommand(
        "norm", "norm form of the frame a b c over the ring t n");
    norm_cmd->add_option("t", norm_args[0])->required();
    norm_cmd->add_option("n", norm_args[1])->required();
    norm_cmd->add_option("a", norm_args[2])->required();
    norm_cmd->add_option("b", norm_args[3])->required();
    norm_cmd->add_option("c", norm_args[4])->required();

    std::string hecke_disc, hecke_pmax;
    auto* hecke_cmd = app.add_subcommand(
        "hecke", "Hecke operators at split primes up to a bound");
    hecke_cmd->add_option("D", hecke_disc)->required();
    hecke_cmd->add_option("pmax", hecke_pmax)->required();

    auto* verify_cmd = app.add_subcommand(
        "verify-universal", "machine-check the defining polynomial identities");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        return emit_error("validation", e.what(), 2);
    }

    try {
        if (reduce_cmd->parsed()) {
            emit(run_reduce(reduce_args));
        } else if (equiv_cmd->parsed()) {
            emit(run_equiv(equiv_args, equiv_wide));
        } else if (compose_cmd->parsed()) {
            emit(run_compose(compose_args, compose_oracle));
        } else if (classgroup_cmd->parsed()) {
            emit(run_classgroup(classgroup_arg, classgroup_narrow));
        } else if (clifford_cmd->parsed()) {
            emit(run_clifford(clifford_args));
        } else if (norm_cmd->parsed()) {
            emit(run_norm(norm_args));
        } else if (hecke_cmd->parsed()) {
            emit(run_hecke(hecke_disc, hecke_pmax));
        } else if (verify_cmd->parsed()) {
            bool ok = false;
            emit(run_verify_universal(ok));
            if (!ok) return 1;
        }
        return 0;
    } catch (const formclass::validation_error& e) {
        return emit_error("validation", e.what(), 2);
    } catch (const formclass::internal_error& e) {
        return emit_error("internal", e.what(), 1);
    } catch (const std::exception& e) {
        return emit_error("internal", e.what(), 1);
    }
}
