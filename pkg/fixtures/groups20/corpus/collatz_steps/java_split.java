static int nextCollatz(int k) {
    if (k < 1) {
        return 0;
    }
    if (k % 2 == 0) {
        return k / 2;
    }
    return 3 * k + 1;
}

static int collatzSteps(int n) {
    if (n < 1) {
        return 0;
    }
    int steps = 0;
    int k = n;
    while (k != 1 && steps < 100) {
        k = nextCollatz(k);
        steps++;
    }
    return steps;
}
