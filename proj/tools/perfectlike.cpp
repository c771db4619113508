#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <omp.h>

#include "perfectlike/bounds.hpp"
#include "perfectlike/catalog.hpp"
#include "perfectlike/config.hpp"
#include "perfectlike/construct.hpp"
#include "perfectlike/io.hpp"
#include "perfectlike/lengthen.hpp"
#include "perfectlike/repro.hpp"
#include "perfectlike/spectra.hpp"
#include "perfectlike/verify.hpp"

using namespace perfectlike;

namespace {

void emit_code(const Code& c, const std::string& out) {
    if (out.empty() || out == "-")
        write_code(std::cout, c);
    else
        write_code_file(out, c);
}

void emit_partition(const Partition& p, const std::string& out) {
    if (out.empty() || out == "-")
        write_partition(std::cout, p);
    else
        write_partition_file(out, p);
}

Partition named_partition(const std::string& name) {
    if (name == "h44-partition") return load_embedded_partition();
    throw parameter_error("unknown --name (available: h44-partition)");
}

void print_bound(const BoundReport& b, bool tsv) {
    if (tsv) {
        std::cout << b.formula << "\t" << b.q << "\t" << b.n << "\t" << b.fold << "\t"
                  << (b.applicable ? int128_to_string(b.best()) : "n/a") << "\t"
                  << (b.applicable ? b.value.str() : b.reason) << "\n";
        return;
    }
    if (!b.applicable) {
        std::cout << b.formula << ": not applicable (" << b.reason << ")\n";
        return;
    }
    std::cout << int128_to_string(b.best()) << "\n";
    std::cout << "# " << b.formula << " exact " << b.value.str();
    if (b.even_value) std::cout << ", even-improved " << b.even_value->str();
    if (b.equality_forbids_multiplicity)
        std::cout << ", equality forces a set code with A1 = lambda-1";
    std::cout << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for codes with parameters of shortened 1-perfect codes"};
    app.require_subcommand(1);

    std::optional<std::uint64_t> budget_flag;
    int threads = 0;
    app.add_option("--budget", budget_flag, "vertex enumeration budget (overrides PERFECTLIKE_BUDGET)");
    app.add_option("--threads", threads, "OpenMP thread count (0 = default)");

    // construct
    auto* construct = app.add_subcommand("construct", "build codes and partitions");
    construct->require_subcommand(1);
    int cq = 3, cm = 2, cn = 3, ca = 0, clambda = 1;
    std::string cout_path, cmode = "field", bfile;
    auto add_out = [&](CLI::App* s) { s->add_option("--out", cout_path, "output file (default stdout)"); };

    auto* c_ham = construct->add_subcommand("hamming", "Hamming code of order m over GF(q)");
    c_ham->add_option("--q", cq)->required();
    c_ham->add_option("--m", cm)->required();
    bool do_shorten = false;
    c_ham->add_flag("--shorten", do_shorten, "shorten at the last position by 0");
    add_out(c_ham);

    auto* c_pack = construct->add_subcommand("coset-packing", "lambda-fold packing from Hamming shortenings");
    c_pack->add_option("--q", cq)->required();
    c_pack->add_option("--m", cm)->required();
    c_pack->add_option("--lambda", clambda)->required();
    add_out(c_pack);

    auto* c_sum = construct->add_subcommand("sum-code", "MDS sum code M_a");
    c_sum->add_option("--q", cq)->required();
    c_sum->add_option("--n", cn)->required();
    c_sum->add_option("--a", ca)->required();
    c_sum->add_option("--mode", cmode, "field|modq");
    add_out(c_sum);

    auto* c_concat = construct->add_subcommand("concat-s", "concatenated code S from a partition file");
    c_concat->add_option("--partition", bfile, "B-partition file")->required();
    c_concat->add_option("--m", cm, "order of the D-partition")->required();
    add_out(c_concat);

    auto* c_ps = construct->add_subcommand("partition-of-s", "partition of H(n'-1,q) through S");
    c_ps->add_option("--partition", bfile, "B-partition file")->required();
    c_ps->add_option("--m", cm, "order of the D-partition")->required();
    add_out(c_ps);

    std::string cfile;
    int cpos = 0, csym = 0;
    auto* c_short = construct->add_subcommand("shorten", "shorten a code file at a position");
    c_short->add_option("file", cfile, "input code file")->required();
    c_short->add_option("--pos", cpos, "coordinate to shorten (1-based)")->required();
    c_short->add_option("--symbol", csym, "symbol kept before deleting the coordinate");
    add_out(c_short);

    auto* c_punct = construct->add_subcommand("puncture", "puncture a code file at a position");
    c_punct->add_option("file", cfile, "input code file")->required();
    c_punct->add_option("--pos", cpos, "coordinate to delete (1-based)")->required();
    add_out(c_punct);

    bool oracle_out = false;
    auto* c_dpart = construct->add_subcommand("dpart", "distance-3 MDS partition D of M_0");
    c_dpart->add_option("--q", cq)->required();
    c_dpart->add_option("--m", cm)->required();
    c_dpart->add_flag("--oracle", oracle_out, "print a descriptor instead of materializing");
    add_out(c_dpart);

    auto* c_rom = construct->add_subcommand("romanov", "1-perfect concatenation of a perfect-code partition with D");
    c_rom->add_option("--partition", bfile, "partition of H(n',q) into 1-perfect codes")->required();
    c_rom->add_option("--m", cm, "order of the D-partition")->required();
    add_out(c_rom);

    auto* c_t4 = construct->add_subcommand("theorem4", "recursive 4-ary non-shortened family");
    c_t4->add_option("--m", cm, "recursion level (>= 3)")->required();
    c_t4->add_flag("--oracle", oracle_out, "print a descriptor instead of materializing");
    add_out(c_t4);

    // verify
    auto* verify = app.add_subcommand("verify", "checks on a code file");
    std::string vfile;
    int vlambda = 0, vmu = 0;
    bool vperfect = false, vcr = false, vmds = false, vmindist = false;
    verify->add_option("file", vfile, "code file")->required();
    verify->add_option("--packing", vlambda, "check lambda-fold packing");
    verify->add_option("--covering", vmu, "check mu-fold covering");
    verify->add_flag("--one-perfect", vperfect);
    verify->add_flag("--completely-regular", vcr);
    verify->add_flag("--mds", vmds);
    verify->add_flag("--min-dist", vmindist, "print the minimum distance");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "closed-form bound values");
    int bq = 3, bn = 3, blambda = 1, bmu = 0;
    bool bdist2 = false, btsv = false;
    bounds->add_option("--q", bq)->required();
    bounds->add_option("--n", bn)->required();
    bounds->add_option("--lambda", blambda, "packing fold (upper bounds)");
    bounds->add_option("--mu", bmu, "covering fold (lower bound)");
    bounds->add_flag("--dist2", bdist2, "distance-2 refinement");
    bounds->add_flag("--tsv", btsv);

    // spectra
    auto* spectra = app.add_subcommand("spectra", "distance and dual distributions");
    std::string sfile;
    int slambda = 0;
    bool stsv = false;
    spectra->add_option("file", sfile, "code file")->required();
    spectra->add_option("--lambda", slambda, "also evaluate the A012 inequality at this fold");
    spectra->add_flag("--tsv", stsv);

    // lengthen
    auto* lengthen = app.add_subcommand("lengthen", "lengthenability deciders");
    lengthen->require_subcommand(1);
    std::string lfile, lname, lout;
    auto* l_code = lengthen->add_subcommand("code", "single-code decision");
    l_code->add_option("file", lfile, "code file")->required();
    l_code->add_option("--out", lout, "write the lengthened code here on success");
    auto* l_part = lengthen->add_subcommand("partition", "joint partition decision");
    l_part->add_option("file", lfile, "partition file");
    l_part->add_option("--name", lname, "embedded partition name");
    l_part->add_option("--out", lout, "write the lengthened partition here on SAT");
    auto* l_cls = lengthen->add_subcommand("classify-h33", "classify all H(3,3) partitions");
    auto* l_search = lengthen->add_subcommand("search", "randomized partition search");
    int lsq = 4;
    std::uint64_t lseed = 0, lbudget = 100;
    l_search->add_option("--q", lsq, "4 or 5")->required();
    l_search->add_option("--seed", lseed)->required();
    l_search->add_option("--budget", lbudget, "completion attempts");
    l_search->add_option("--out", lout, "file prefix for non-lengthenable finds");

    // catalog
    auto* catalog = app.add_subcommand("catalog", "embedded objects");
    std::string katname = "h44-partition", katout;
    catalog->add_option("--name", katname, "object name");
    catalog->add_option("--out", katout, "output file (default stdout)");

    // repro
    auto* repro = app.add_subcommand("repro", "reproduction suite");
    std::string rwhat = "all";
    std::uint64_t rseed = 0;
    bool rtsv = false;
    repro->add_option("what", rwhat, "'all'");
    repro->add_option("--seed", rseed)->required();
    repro->add_flag("--tsv", rtsv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (budget_flag)
            set_vertex_budget(*budget_flag);
        else if (const char* env = std::getenv("PERFECTLIKE_BUDGET"))
            set_vertex_budget(std::strtoull(env, nullptr, 10));
        if (threads > 0) omp_set_num_threads(threads);

        if (c_ham->parsed()) {
            Code h = hamming_code(cq, cm).materialize();
            emit_code(do_shorten ? shorten(h, h.n(), 0) : h, cout_path);
        } else if (c_pack->parsed()) {
            emit_code(coset_multifold_packing(cq, cm, clambda), cout_path);
        } else if (c_sum->parsed()) {
            if (cmode != "field" && cmode != "modq") throw parameter_error("--mode must be field|modq");
            emit_code(mds_sum_code(cq, cn, ca, cmode == "field" ? SumMode::Field : SumMode::ModQ),
                      cout_path);
        } else if (c_concat->parsed() || c_ps->parsed()) {
            Partition b = read_partition_file(bfile);
            DPartition d = mds_partition_D(b.q, cm);
            if (c_concat->parsed())
                emit_code(concat_S(b, d), cout_path);
            else
                emit_partition(partition_of_S(b, d), cout_path);
        } else if (c_short->parsed()) {
            emit_code(shorten(read_code_file(cfile), cpos, csym), cout_path);
        } else if (c_punct->parsed()) {
            emit_code(puncture(read_code_file(cfile), cpos), cout_path);
        } else if (c_dpart->parsed()) {
            DPartition d = mds_partition_D(cq, cm);
            if (oracle_out)
                std::cout << "{\"kind\": \"d-partition\", \"q\": " << cq << ", \"n\": " << d.len()
                          << ", \"m\": " << cm << ", \"classes\": " << d.num_classes()
                          << ", \"class_size\": " << d.class_size()
                          << ", \"min_dist\": 3, \"construction\": \"linear kernel cosets\"}\n";
            else
                emit_partition(d.materialize(), cout_path);
        } else if (c_rom->parsed()) {
            Partition b = read_partition_file(bfile);
            emit_code(romanov_perfect(b, mds_partition_D(b.q, cm)), cout_path);
        } else if (c_t4->parsed()) {
            Theorem4Certificate cert;
            Code t = theorem4_code(cm, &cert);
            if (oracle_out)
                std::cout << "{\"kind\": \"oracle-code\", \"q\": " << t.q() << ", \"n\": " << t.n()
                          << ", \"size\": " << t.size() << ", \"min_dist\": " << t.min_dist()
                          << ", \"m\": " << cm << ", \"distance3_certified\": "
                          << (cert.d_distance3_certified ? "true" : "false")
                          << ", \"basis\": \"" << cert.basis << "\"}\n";
            else
                emit_code(t, cout_path); // throws budget_error unless materializable
        } else if (verify->parsed()) {
            Code c = read_code_file(vfile);
            bool all = true;
            if (vmindist) std::cout << "min-dist " << c.min_dist() << "\n";
            if (vlambda > 0) {
                PackingVerdict v = is_multifold_packing(c, vlambda);
                std::cout << "packing(" << vlambda << ") " << (v.ok ? "ok" : "violated") << "\n";
                if (!v.ok && v.witness)
                    std::cout << "# witness " << v.witness->str() << " covered "
                              << v.witness_count << " times\n";
                all = all && v.ok;
            }
            if (vmu > 0) {
                PackingVerdict v = is_multiple_covering(c, vmu);
                std::cout << "covering(" << vmu << ") " << (v.ok ? "ok" : "violated") << "\n";
                all = all && v.ok;
            }
            if (vperfect) {
                bool ok = is_one_perfect(c);
                std::cout << "one-perfect " << (ok ? "ok" : "no") << "\n";
                all = all && ok;
            }
            if (vcr) {
                RegularityVerdict v = is_completely_regular(c);
                std::cout << "completely-regular " << (v.ok ? "ok" : "no") << "\n";
                if (v.ok) {
                    std::cout << "# quotient";
                    for (const auto& row : v.quotient) {
                        std::cout << " (";
                        for (std::size_t j = 0; j < row.size(); ++j)
                            std::cout << (j ? "," : "") << row[j];
                        std::cout << ")";
                    }
                    std::cout << "\n";
                }
                all = all && v.ok;
            }
            if (vmds) {
                bool ok = is_mds(c);
                std::cout << "mds " << (ok ? "ok" : "no") << "\n";
                all = all && ok;
            }
            return all ? 0 : 1;
        } else if (bounds->parsed()) {
            if (bmu > 0)
                print_bound(covering_lower_bound(bq, bn, bmu), btsv);
            else if (bdist2)
                print_bound(packing_upper_bound_dist2(bq, bn, blambda), btsv);
            else
                print_bound(packing_upper_bound(bq, bn, blambda), btsv);
        } else if (spectra->parsed()) {
            Code c = read_code_file(sfile);
            DistanceDistribution a = distance_distribution(c);
            DualDistribution b = dual_distribution(a);
            const char* sep = stsv ? "\t" : " ";
            std::cout << "A";
            for (const Rational& x : a.A) std::cout << sep << x.str();
            std::cout << "\nB";
            for (const Rational& x : b.B) std::cout << sep << x.str();
            std::cout << "\n";
            if (slambda > 0) {
                LemmaReport lr = lemma_check(a.A, c.q(), c.n(), slambda);
                std::cout << "a012 lhs=" << lr.lhs.str() << " rhs=" << lr.rhs_odd.str();
                if (lr.rhs_even) std::cout << " rhs-even=" << lr.rhs_even->str();
                std::cout << " verdict="
                          << (lr.verdict == LemmaVerdict::Violated
                                  ? "violated"
                                  : lr.equality ? "equality" : "satisfied")
                          << "\n";
                return lr.verdict == LemmaVerdict::Violated ? 1 : 0;
            }
        } else if (l_code->parsed()) {
            Code c = read_code_file(lfile);
            LengthenCertificate cert = lengthen_code(c);
            if (cert.lengthenable()) {
                std::cout << "LENGTHENABLE\n";
                if (!lout.empty()) emit_code(*cert.lengthened, lout);
                return 0;
            }
            std::cout << "NOT LENGTHENABLE: ";
            switch (cert.verdict) {
            case LengthenCertificate::Verdict::NotDistance1Pair:
                std::cout << "shell words at distance 1: " << cert.witness_pair->first.str()
                          << " / " << cert.witness_pair->second.str() << "\n";
                break;
            case LengthenCertificate::Verdict::NotCoveringRadius:
                std::cout << "word at distance >= 3 from the code: " << cert.uncovered->str()
                          << "\n";
                break;
            default:
                std::cout << "shell distance-2 graph admits no proper (q-1)-coloring\n";
            }
            return 1;
        } else if (l_part->parsed()) {
            Partition p = lname.empty() ? read_partition_file(lfile) : named_partition(lname);
            PartitionLengthenResult r = lengthen_partition(p);
            if (r.sat) {
                std::cout << "SAT\n";
                if (!lout.empty()) emit_partition(*r.lengthened, lout);
                return 0;
            }
            std::cout << "UNSAT conflict core:";
            for (int i : r.conflict_core)
                std::cout << " " << (i < int(p.labels.size()) ? p.labels[std::size_t(i)]
                                                              : std::to_string(i));
            std::cout << "\n";
            for (const auto& w : r.witnesses)
                std::cout << "# classes " << w.class_i << " and " << w.class_j
                          << " both claim " << w.word.str() << "\n";
            return 1;
        } else if (l_cls->parsed()) {
            H33Classification cls = classify_h33_partitions();
            std::cout << "raw partitions " << cls.raw_count << "\n"
                      << "equivalence classes " << cls.representatives.size() << "\n";
            for (std::size_t k = 0; k < cls.representatives.size(); ++k) {
                std::cout << "class " << k << " orbit " << cls.class_sizes[k] << " lengthen "
                          << (cls.rep_lengthenable[k] ? "SAT" : "UNSAT") << "\n";
                write_partition(std::cout, cls.representatives[k]);
            }
        } else if (l_search->parsed()) {
            SearchReport r = search_partitions(lsq, lseed, lbudget);
            std::cout << "attempts " << r.attempts << "\npartitions " << r.partitions_found
                      << "\nlengthenable " << r.sat_count << "\nnon-lengthenable "
                      << r.non_lengthenable.size() << "\n";
            for (std::size_t k = 0; k < r.non_lengthenable.size(); ++k) {
                const SearchFind& f = r.non_lengthenable[k];
                std::cout << "# find " << k << " at attempt " << f.attempt << ", core:";
                for (int i : f.verdict.conflict_core) std::cout << " " << i;
                std::cout << "\n";
                if (lout.empty())
                    write_partition(std::cout, f.partition);
                else
                    write_partition_file(lout + "." + std::to_string(k), f.partition);
            }
        } else if (catalog->parsed()) {
            emit_partition(named_partition(katname), katout);
        } else if (repro->parsed()) {
            if (rwhat != "all") throw parameter_error("only 'repro all' is supported");
            AcceptanceRun run = run_acceptance(rseed);
            std::cout << format_results(run.results, rtsv);
            return run.all_pass ? 0 : 1;
        }
        return 0;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const parameter_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
