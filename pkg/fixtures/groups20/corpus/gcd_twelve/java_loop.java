static int gcdTwelve(int n) {
    int a = n < 0 ? -n : n;
    int b = 12;
    while (b != 0) {
        int r = a % b;
        a = b;
        b = r;
    }
    return a;
}
