#include <iostream>
#include <vector>

#include "hecke/errors.hpp"
#include "request.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        const hecke::cli::Request request = hecke::cli::parse_args(args, std::cout, std::cerr);
        const hecke::cli::Report report =
            hecke::cli::run(request, &std::cin, std::cout, std::cerr);
        return report.exit_code;
    } catch (const hecke::cli::early_exit& done) {
        return done.code;
    } catch (const hecke::usage_error& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    } catch (const hecke::precondition_error& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 2;
    } catch (const std::exception& error) {
        std::cerr << "internal error: " << error.what() << "\n";
        return 4;
    }
}
