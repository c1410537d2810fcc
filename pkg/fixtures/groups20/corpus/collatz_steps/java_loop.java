static int collatzSteps(int n) {
    if (n < 1) {
        return 0;
    }
    int steps = 0;
    int k = n;
    while (k != 1 && steps < 100) {
        if (k % 2 == 0) {
            k = k / 2;
        } else {
            k = 3 * k + 1;
        }
        steps++;
    }
    return steps;
}
