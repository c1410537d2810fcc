static int countDivisors(int n) {
    int m = n < 0 ? -n : n;
    if (m == 0) {
        return 0;
    }
    int count = 0;
    int i = 1;
    while (i <= m) {
        if (m % i == 0) {
            count++;
        }
        i++;
    }
    return count;
}
