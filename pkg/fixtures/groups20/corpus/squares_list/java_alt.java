import java.util.ArrayList;
import java.util.List;

static List<Integer> squaresList(int n) {
    List<Integer> values = new ArrayList<Integer>();
    int i = 0;
    while (i < n) {
        values.add(i * i);
        i++;
    }
    return values;
}
