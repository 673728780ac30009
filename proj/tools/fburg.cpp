// Command-line driver. Talks to the solver only through the C interface.

#include <cstdio>

#include "fburgers/fburgers.h"

int main(int argc, char** argv) {
    fb_config* cfg = nullptr;
    switch (fb_config_from_args(argc, argv, &cfg)) {
    case FB_OK: break;
    case FB_ERR_HELP_REQUESTED: std::fputs(fb_usage(), stdout); return FB_EXIT_COMPLETED;
    default:
        std::fprintf(stderr, "fburg: %s\n\n%s", fb_last_error(), fb_usage());
        return FB_EXIT_USAGE;
    }

    fb_result* result = nullptr;
    const fb_error run = fb_run(cfg, &result);
    fb_config_destroy(cfg);
    if (run != FB_OK) {
        std::fprintf(stderr, "fburg: %s\n", fb_last_error());
        return run == FB_ERR_USAGE ? FB_EXIT_USAGE : FB_EXIT_NUMERIC_FAILURE;
    }

    int code = fb_result_exit_code(result);
    if (fb_result_write(result) != FB_OK) {
        std::fprintf(stderr, "fburg: %s\n", fb_last_error());
        code = FB_EXIT_IO;
    } else {
        fb_blowup_report rep{};
        fb_result_report(result, &rep);
        std::printf("steps: %zu\n", fb_result_record_count(result) - 1);
        if (rep.has_predicted_t_star) std::printf("predicted blow-up time: %.10g\n", rep.predicted_t_star);
        if (rep.detected) std::printf("halted at t = %.10g (exit %d)\n", rep.detected_t, code);
    }
    fb_result_destroy(result);
    return code;
}
