static int collatzSteps(int n) {
    if (n < 1) {
        return 0;
    }
    int steps = 0;
    int k = n;
    while (k != 1) {
        if (steps >= 100) {
            break;
        }
        k = k % 2 == 0 ? k / 2 : 3 * k + 1;
        steps++;
    }
    return steps;
}
